/**
 * Explorer wiring: tabs, parameter controls, the frontier chart, the
 * solution / comparison panels, shift controls, and saved scenarios.
 *
 * Every request carries the edit version current at send time; a response
 * is dropped unless its version still matches, so the displayed solution
 * always corresponds to the displayed parameters. The client does no solver
 * math: all displayed numbers are formatted service-response values (the
 * comparison deltas are displayed differences of two such values).
 */

import { ApiClient, ServiceFieldError, ServiceUnreachableError } from './api.js';
import { renderFrontierChart } from './chart.js';
import { debounce } from './debounce.js';
import { fmt4, fmtDelta, fmtDeltaZ, fmtZ } from './format.js';
import {
  applySavedScenario,
  deleteScenario,
  type DynamicParams,
  type ExplorerState,
  initialState,
  loadSavedScenarios,
  type Mode,
  saveScenario,
  type StaticParams,
} from './state.js';
import type {
  ChainRequest,
  ChainResponse,
  DynamicRequest,
  DynamicResponse,
  StaticRequest,
  StaticResponse,
  TraceResponse,
} from './types.js';

export type AppOptions = {
  debounceMs?: number;
  traceN?: number;
};

export type AppHandle = {
  root: HTMLElement;
  getState: () => ExplorerState;
  /** settle the in-flight refresh, if any (test hook) */
  flush: () => Promise<void>;
  refresh: () => void;
};

const TEMPLATE = `
  <div class="banner" data-role="banner" hidden>
    <span data-role="banner-message"></span>
    <button type="button" data-role="retry">Retry</button>
  </div>
  <nav class="tabs">
    <button type="button" data-role="tab" data-mode="static" class="active">One period</button>
    <button type="button" data-role="tab" data-mode="dynamic">Two periods</button>
    <button type="button" data-role="tab" data-mode="chain">Chain (read-only)</button>
  </nav>

  <section data-section="static">
    <form data-role="static-form" class="controls">
      <fieldset>
        <legend>Frontier</legend>
        <label>a <input type="number" data-path="frontier.a" min="1e-6" step="0.1"></label>
        <label>b <input type="number" data-path="frontier.b" min="1e-6" step="0.01"></label>
        <label>c <input type="number" data-path="frontier.c" min="1e-6" step="0.5"></label>
      </fieldset>
      <fieldset>
        <legend>Valuation</legend>
        <label>price of a life <input type="number" data-path="valuation.p_life" min="0" step="10000"></label>
        <label>price of a job <input type="number" data-path="valuation.p_job" min="0" step="1000"></label>
      </fieldset>
      <fieldset>
        <legend>Display</legend>
        <label>unit scale <input type="number" data-path="unit_scale" min="1" step="1"></label>
      </fieldset>
    </form>

    <div class="shift" data-role="shift-controls">
      <label>shift
        <select data-role="shift-kind">
          <option value="level">level</option>
          <option value="proportional">proportional</option>
          <option value="per_axis">per axis</option>
        </select>
      </label>
      <label>factor <input type="number" data-role="shift-factor-1" value="2" min="1e-6" step="0.5"></label>
      <label data-role="shift-factor-2-wrap" hidden>jobs factor
        <input type="number" data-role="shift-factor-2" value="1" min="1e-6" step="0.5">
      </label>
      <button type="button" data-role="apply-shift">Apply shift</button>
    </div>

    <div class="chart" data-role="chart-host"></div>

    <div class="solution" data-role="static-solution" data-version="">
      <h3>Optimal plan <small data-role="static-version-tag"></small></h3>
      <dl>
        <dt>lives saved</dt><dd data-field="lives"></dd>
        <dt>jobs saved</dt><dd data-field="jobs"></dd>
        <dt>lives/jobs ratio</dt><dd data-field="ratio"></dd>
        <dt>shadow price</dt><dd data-field="multiplier"></dd>
        <dt>benefit z*</dt><dd data-field="z"></dd>
        <dt>first-order check</dt><dd data-field="kkt"></dd>
      </dl>
    </div>

    <div class="comparison" data-role="comparison">
      <button type="button" data-role="pin-baseline">Pin current as baseline</button>
      <table data-role="comparison-table" hidden>
        <thead><tr><th></th><th>lives</th><th>jobs</th><th>z*</th></tr></thead>
        <tbody>
          <tr><th>baseline</th>
            <td data-field="base-lives"></td><td data-field="base-jobs"></td><td data-field="base-z"></td></tr>
          <tr><th>current</th>
            <td data-field="cur-lives"></td><td data-field="cur-jobs"></td><td data-field="cur-z"></td></tr>
          <tr><th>delta</th>
            <td data-field="delta-lives"></td><td data-field="delta-jobs"></td><td data-field="delta-z"></td></tr>
        </tbody>
      </table>
    </div>

    <div class="saved" data-role="saved-scenarios">
      <input type="text" data-role="save-name" placeholder="scenario name">
      <button type="button" data-role="save-scenario">Save</button>
      <ul data-role="saved-list"></ul>
    </div>
  </section>

  <section data-section="dynamic" hidden>
    <form data-role="dynamic-form" class="controls">
      <fieldset>
        <legend>Constraint 1 (period-2 lives vs period-1 jobs)</legend>
        <label>a1 <input type="number" data-path="constraint1.a" min="1e-6" step="0.1"></label>
        <label>b1 <input type="number" data-path="constraint1.b" min="1e-6" step="0.1"></label>
        <label>c1 <input type="number" data-path="constraint1.c" min="1e-6" step="0.5"></label>
      </fieldset>
      <fieldset>
        <legend>Constraint 2 (period-1 lives vs period-2 jobs)</legend>
        <label>a2 <input type="number" data-path="constraint2.a" min="1e-6" step="0.1"></label>
        <label>b2 <input type="number" data-path="constraint2.b" min="1e-6" step="0.1"></label>
        <label>c2 <input type="number" data-path="constraint2.c" min="1e-6" step="0.5"></label>
      </fieldset>
      <fieldset>
        <legend>Prices</legend>
        <label>life, period 1 <input type="number" data-path="prices.p_life_1" min="0" step="10000"></label>
        <label>job, period 1 <input type="number" data-path="prices.p_job_1" min="0" step="1000"></label>
        <label>life, period 2 <input type="number" data-path="prices.p_life_2" min="0" step="10000"></label>
        <label>job, period 2 <input type="number" data-path="prices.p_job_2" min="0" step="1000"></label>
      </fieldset>
      <fieldset>
        <legend>Discounting</legend>
        <label>rate i <input type="number" data-path="discount_rate" min="-0.99" step="0.01"></label>
      </fieldset>
    </form>

    <div class="charts-row">
      <div data-role="dynamic-chart-1"></div>
      <div data-role="dynamic-chart-2"></div>
    </div>

    <div class="solution" data-role="dynamic-solution" data-version="">
      <h3>Optimal two-period plan <small data-role="dynamic-version-tag"></small></h3>
      <dl>
        <dt>lives saved, period 1</dt><dd data-field="lives_1"></dd>
        <dt>jobs saved, period 1</dt><dd data-field="jobs_1"></dd>
        <dt>lives saved, period 2</dt><dd data-field="lives_2"></dd>
        <dt>jobs saved, period 2</dt><dd data-field="jobs_2"></dd>
        <dt>multiplier, constraint 1</dt><dd data-field="multiplier_1"></dd>
        <dt>multiplier, constraint 2</dt><dd data-field="multiplier_2"></dd>
        <dt>lives_1 / jobs_2</dt><dd data-field="ratio_1"></dd>
        <dt>lives_2 / jobs_1</dt><dd data-field="ratio_2"></dd>
        <dt>discounted benefit z*</dt><dd data-field="z"></dd>
        <dt>first-order check</dt><dd data-field="kkt"></dd>
      </dl>
    </div>
  </section>

  <section data-section="chain" hidden>
    <p>The current two-period scenario, encoded as a constraint chain and
       solved per constraint (present-value prices).</p>
    <table data-role="chain-table">
      <thead>
        <tr><th>lives period</th><th>jobs period</th><th>lives*</th><th>jobs*</th>
            <th>multiplier</th><th>z*</th></tr>
      </thead>
      <tbody></tbody>
      <tfoot><tr><th colspan="5">total</th><td data-field="chain-total"></td></tr></tfoot>
    </table>
  </section>
`;

const STATIC_SETTERS: Record<string, (p: StaticParams, v: number) => void> = {
  'frontier.a': (p, v) => (p.a = v),
  'frontier.b': (p, v) => (p.b = v),
  'frontier.c': (p, v) => (p.c = v),
  'valuation.p_life': (p, v) => (p.p_life = v),
  'valuation.p_job': (p, v) => (p.p_job = v),
};

const DYNAMIC_SETTERS: Record<string, (p: DynamicParams, v: number) => void> = {
  'constraint1.a': (p, v) => (p.a1 = v),
  'constraint1.b': (p, v) => (p.b1 = v),
  'constraint1.c': (p, v) => (p.c1 = v),
  'constraint2.a': (p, v) => (p.a2 = v),
  'constraint2.b': (p, v) => (p.b2 = v),
  'constraint2.c': (p, v) => (p.c2 = v),
  'prices.p_life_1': (p, v) => (p.p_life_1 = v),
  'prices.p_job_1': (p, v) => (p.p_job_1 = v),
  'prices.p_life_2': (p, v) => (p.p_life_2 = v),
  'prices.p_job_2': (p, v) => (p.p_job_2 = v),
  discount_rate: (p, v) => (p.discount_rate = v),
};

const staticRequest = (state: ExplorerState): StaticRequest => ({
  frontier: { a: state.staticParams.a, b: state.staticParams.b, c: state.staticParams.c },
  valuation: { p_life: state.staticParams.p_life, p_job: state.staticParams.p_job },
  unit_scale: state.unitScale,
});

const dynamicRequest = (state: ExplorerState): DynamicRequest => ({
  constraint1: { a: state.dynamicParams.a1, b: state.dynamicParams.b1, c: state.dynamicParams.c1 },
  constraint2: { a: state.dynamicParams.a2, b: state.dynamicParams.b2, c: state.dynamicParams.c2 },
  prices: {
    p_life_1: state.dynamicParams.p_life_1,
    p_job_1: state.dynamicParams.p_job_1,
    p_life_2: state.dynamicParams.p_life_2,
    p_job_2: state.dynamicParams.p_job_2,
  },
  discount_rate: state.dynamicParams.discount_rate,
  unit_scale: state.unitScale,
});

const chainRequest = (state: ExplorerState): ChainRequest => ({
  constraints: [
    {
      a: state.dynamicParams.a1, b: state.dynamicParams.b1, c: state.dynamicParams.c1,
      lives_period: 2, jobs_period: 1,
    },
    {
      a: state.dynamicParams.a2, b: state.dynamicParams.b2, c: state.dynamicParams.c2,
      lives_period: 1, jobs_period: 2,
    },
  ],
  lives_prices: [state.dynamicParams.p_life_1, state.dynamicParams.p_life_2],
  jobs_prices: [state.dynamicParams.p_job_1, state.dynamicParams.p_job_2],
  discount_rate: state.dynamicParams.discount_rate,
  horizon: 2,
  unit_scale: state.unitScale,
});

export const initApp = (
  root: HTMLElement,
  api: ApiClient,
  storage: Storage,
  options: AppOptions = {},
): AppHandle => {
  const doc = root.ownerDocument;
  const debounceMs = options.debounceMs ?? 200;
  const traceN = options.traceN ?? 121;

  root.innerHTML = TEMPLATE;
  const pick = <T extends Element>(selector: string): T => {
    const node = root.querySelector(selector);
    if (!node) throw new Error(`missing element ${selector}`);
    return node as T;
  };

  const state = initialState();
  let saved = loadSavedScenarios(storage);
  let pending: Promise<void> = Promise.resolve();

  // ------------------------------------------------------------------ inputs

  const inputsFor = (form: Element): HTMLInputElement[] =>
    Array.from(form.querySelectorAll('input[data-path]'));

  const writeInputs = () => {
    for (const input of inputsFor(pick('[data-role="static-form"]'))) {
      const path = input.dataset.path!;
      if (path === 'unit_scale') input.value = String(state.unitScale);
      else if (path.startsWith('frontier.'))
        input.value = String(state.staticParams[path.slice(9) as 'a' | 'b' | 'c']);
      else if (path === 'valuation.p_life') input.value = String(state.staticParams.p_life);
      else if (path === 'valuation.p_job') input.value = String(state.staticParams.p_job);
    }
    const dyn = state.dynamicParams;
    const dynValues: Record<string, number> = {
      'constraint1.a': dyn.a1, 'constraint1.b': dyn.b1, 'constraint1.c': dyn.c1,
      'constraint2.a': dyn.a2, 'constraint2.b': dyn.b2, 'constraint2.c': dyn.c2,
      'prices.p_life_1': dyn.p_life_1, 'prices.p_job_1': dyn.p_job_1,
      'prices.p_life_2': dyn.p_life_2, 'prices.p_job_2': dyn.p_job_2,
      discount_rate: dyn.discount_rate,
    };
    for (const input of inputsFor(pick('[data-role="dynamic-form"]'))) {
      input.value = String(dynValues[input.dataset.path!]);
    }
  };

  const clearFieldErrors = () => {
    for (const node of Array.from(root.querySelectorAll('.field-error'))) node.remove();
    for (const input of Array.from(root.querySelectorAll('input.invalid'))) {
      input.classList.remove('invalid');
    }
  };

  const showFieldError = (path: string, message: string): boolean => {
    const input = root.querySelector<HTMLInputElement>(`input[data-path="${path}"]`);
    if (!input) return false;
    input.classList.add('invalid');
    const note = doc.createElement('span');
    note.className = 'field-error';
    note.textContent = message;
    input.insertAdjacentElement('afterend', note);
    return true;
  };

  // ------------------------------------------------------------------ banner

  const banner = pick<HTMLElement>('[data-role="banner"]');
  const showBanner = (message: string) => {
    banner.hidden = false;
    pick('[data-role="banner-message"]').textContent = message;
  };
  const hideBanner = () => {
    banner.hidden = true;
  };

  // ------------------------------------------------------------------ render

  const setField = (panel: Element, field: string, text: string) => {
    const node = panel.querySelector(`[data-field="${field}"]`);
    if (node) node.textContent = text;
  };

  const kktSummary = (kkt: { passed: boolean; max_residual: number }): string =>
    `${kkt.passed ? 'pass' : 'FAIL'} (max residual ${kkt.max_residual.toExponential(2)})`;

  const renderStatic = (response: StaticResponse, trace: TraceResponse, version: number) => {
    const panel = pick<HTMLElement>('[data-role="static-solution"]');
    panel.dataset.version = String(version);
    pick('[data-role="static-version-tag"]').textContent = `#${version}`;
    setField(panel, 'lives', fmt4(response.solution.allocation.lives_saved));
    setField(panel, 'jobs', fmt4(response.solution.allocation.jobs_saved));
    setField(
      panel,
      'ratio',
      response.optimality_ratio === null ? 'n/a' : fmt4(response.optimality_ratio),
    );
    setField(panel, 'multiplier', fmt4(response.solution.multiplier));
    setField(panel, 'z', fmtZ(response.solution.z_star_scaled));
    setField(panel, 'kkt', kktSummary(response.diagnostics.kkt));

    const host = pick<HTMLElement>('[data-role="chart-host"]');
    host.replaceChildren(
      renderFrontierChart(doc, {
        trace,
        optimum: response.solution.allocation,
        tangent: response.tangent,
        unitScale: response.unit_scale,
      }),
    );
    renderComparison(response);
  };

  const renderComparison = (current: StaticResponse | null) => {
    const table = pick<HTMLTableElement>('[data-role="comparison-table"]');
    if (!state.baseline || !current) {
      table.hidden = true;
      return;
    }
    table.hidden = false;
    const base = state.baseline.response.solution;
    const cur = current.solution;
    setField(table, 'base-lives', fmt4(base.allocation.lives_saved));
    setField(table, 'base-jobs', fmt4(base.allocation.jobs_saved));
    setField(table, 'base-z', fmtZ(base.z_star_scaled));
    setField(table, 'cur-lives', fmt4(cur.allocation.lives_saved));
    setField(table, 'cur-jobs', fmt4(cur.allocation.jobs_saved));
    setField(table, 'cur-z', fmtZ(cur.z_star_scaled));
    setField(table, 'delta-lives', fmtDelta(cur.allocation.lives_saved, base.allocation.lives_saved));
    setField(table, 'delta-jobs', fmtDelta(cur.allocation.jobs_saved, base.allocation.jobs_saved));
    setField(table, 'delta-z', fmtDeltaZ(cur.z_star_scaled, base.z_star_scaled));
  };

  const renderDynamic = (
    response: DynamicResponse,
    traces: [TraceResponse, TraceResponse],
    version: number,
  ) => {
    const panel = pick<HTMLElement>('[data-role="dynamic-solution"]');
    panel.dataset.version = String(version);
    pick('[data-role="dynamic-version-tag"]').textContent = `#${version}`;
    const alloc = response.solution.allocations;
    setField(panel, 'lives_1', fmt4(alloc.lives_1));
    setField(panel, 'jobs_1', fmt4(alloc.jobs_1));
    setField(panel, 'lives_2', fmt4(alloc.lives_2));
    setField(panel, 'jobs_2', fmt4(alloc.jobs_2));
    setField(panel, 'multiplier_1', fmt4(response.solution.multipliers[0]));
    setField(panel, 'multiplier_2', fmt4(response.solution.multipliers[1]));
    const [first, second] = response.optimality_ratios;
    setField(panel, 'ratio_1', first === null ? 'n/a' : fmt4(first));
    setField(panel, 'ratio_2', second === null ? 'n/a' : fmt4(second));
    setField(panel, 'z', fmtZ(response.solution.z_star_scaled));
    setField(panel, 'kkt', kktSummary(response.diagnostics.kkt));

    // constraint 1 couples (period-2 lives, period-1 jobs); constraint 2 the rest
    pick<HTMLElement>('[data-role="dynamic-chart-1"]').replaceChildren(
      renderFrontierChart(doc, {
        trace: traces[0],
        optimum: { lives_saved: alloc.lives_2, jobs_saved: alloc.jobs_1 },
        tangent: [],
        unitScale: response.unit_scale,
      }),
    );
    pick<HTMLElement>('[data-role="dynamic-chart-2"]').replaceChildren(
      renderFrontierChart(doc, {
        trace: traces[1],
        optimum: { lives_saved: alloc.lives_1, jobs_saved: alloc.jobs_2 },
        tangent: [],
        unitScale: response.unit_scale,
      }),
    );
  };

  const renderChain = (response: ChainResponse) => {
    const table = pick<HTMLTableElement>('[data-role="chain-table"]');
    const body = table.querySelector('tbody')!;
    body.replaceChildren();
    for (const row of response.solution.per_constraint) {
      const tr = doc.createElement('tr');
      const cells = [
        String(row.lives_period),
        String(row.jobs_period),
        fmt4(row.allocation.lives_saved),
        fmt4(row.allocation.jobs_saved),
        fmt4(row.multiplier),
        fmtZ(row.z_star),
      ];
      for (const text of cells) {
        const td = doc.createElement('td');
        td.textContent = text;
        tr.appendChild(td);
      }
      body.appendChild(tr);
    }
    setField(table, 'chain-total', fmtZ(response.solution.z_total_scaled));
  };

  // ----------------------------------------------------------------- refresh

  const handleFailure = (err: unknown) => {
    if (err instanceof ServiceUnreachableError) {
      showBanner('Service unreachable. Check that the solver is running, then retry.');
      return;
    }
    if (err instanceof ServiceFieldError) {
      if (!(err.path && showFieldError(err.path, err.message))) {
        showBanner(`${err.code}: ${err.message}`);
      }
      return;
    }
    throw err;
  };

  const refresh = () => {
    const version = state.version;
    const mode = state.mode;
    clearFieldErrors();
    let work: Promise<void>;
    if (mode === 'static') {
      const request = staticRequest(state);
      work = Promise.all([api.solveStatic(request), api.trace(request.frontier, traceN)]).then(
        ([response, trace]) => {
          if (version !== state.version || state.mode !== 'static') return;
          state.lastStatic = { version, response };
          hideBanner();
          renderStatic(response, trace, version);
        },
      );
    } else if (mode === 'dynamic') {
      const request = dynamicRequest(state);
      work = Promise.all([
        api.solveDynamic(request),
        api.trace(request.constraint1, traceN),
        api.trace(request.constraint2, traceN),
      ]).then(([response, trace1, trace2]) => {
        if (version !== state.version || state.mode !== 'dynamic') return;
        state.lastDynamic = { version, response };
        hideBanner();
        renderDynamic(response, [trace1, trace2], version);
      });
    } else {
      work = api.solveChain(chainRequest(state)).then((response) => {
        if (version !== state.version || state.mode !== 'chain') return;
        hideBanner();
        renderChain(response);
      });
    }
    pending = work.catch(handleFailure);
  };

  const debouncedRefresh = debounce(refresh, debounceMs);

  const onEdit = (path: string, raw: string) => {
    const value = Number(raw);
    if (!Number.isFinite(value)) return; // mid-edit garbage: wait for a number
    if (path === 'unit_scale') state.unitScale = value;
    else if (path in STATIC_SETTERS) STATIC_SETTERS[path](state.staticParams, value);
    else if (path in DYNAMIC_SETTERS) DYNAMIC_SETTERS[path](state.dynamicParams, value);
    state.version += 1;
    markStale();
    debouncedRefresh();
  };

  const markStale = () => {
    pick<HTMLElement>('[data-role="static-solution"]').classList.add('stale');
    pick<HTMLElement>('[data-role="dynamic-solution"]').classList.add('stale');
  };

  // ------------------------------------------------------------------- wiring

  for (const form of [pick('[data-role="static-form"]'), pick('[data-role="dynamic-form"]')]) {
    form.addEventListener('input', (event) => {
      const target = event.target as HTMLInputElement;
      if (target.dataset.path) onEdit(target.dataset.path, target.value);
    });
  }

  for (const tab of Array.from(root.querySelectorAll<HTMLButtonElement>('[data-role="tab"]'))) {
    tab.addEventListener('click', () => {
      const mode = tab.dataset.mode as Mode;
      if (mode === state.mode) return;
      state.mode = mode;
      state.version += 1; // cross-tab responses must not land on this view
      for (const other of Array.from(root.querySelectorAll<HTMLButtonElement>('[data-role="tab"]'))) {
        other.classList.toggle('active', other === tab);
      }
      for (const section of Array.from(root.querySelectorAll<HTMLElement>('[data-section]'))) {
        section.hidden = section.dataset.section !== mode;
      }
      refresh();
    });
  }

  pick('[data-role="retry"]').addEventListener('click', () => refresh());

  pick('[data-role="pin-baseline"]').addEventListener('click', () => {
    if (!state.lastStatic) return;
    state.baseline = {
      params: { ...state.staticParams },
      response: state.lastStatic.response,
    };
    renderComparison(state.lastStatic.response);
  });

  const shiftKind = pick<HTMLSelectElement>('[data-role="shift-kind"]');
  shiftKind.addEventListener('change', () => {
    pick<HTMLElement>('[data-role="shift-factor-2-wrap"]').hidden = shiftKind.value !== 'per_axis';
  });

  pick('[data-role="apply-shift"]').addEventListener('click', () => {
    const kind = shiftKind.value as 'level' | 'proportional' | 'per_axis';
    const factor1 = Number(pick<HTMLInputElement>('[data-role="shift-factor-1"]').value);
    const factor2 = Number(pick<HTMLInputElement>('[data-role="shift-factor-2"]').value);
    const factors = kind === 'per_axis' ? [factor1, factor2] : [factor1];
    clearFieldErrors();
    pending = api
      .shift({
        frontier: { a: state.staticParams.a, b: state.staticParams.b, c: state.staticParams.c },
        shift: { kind, factors },
      })
      .then((response) => {
        // the shifted parameters come from the service, not client math
        state.staticParams.a = response.shifted.a;
        state.staticParams.b = response.shifted.b;
        state.staticParams.c = response.shifted.c;
        state.version += 1;
        writeInputs();
        hideBanner();
        refresh();
        return pending;
      })
      .catch(handleFailure);
  });

  const renderSavedList = () => {
    const list = pick<HTMLUListElement>('[data-role="saved-list"]');
    list.replaceChildren();
    for (const scenario of saved) {
      const item = doc.createElement('li');
      const label = doc.createElement('span');
      label.textContent = `${scenario.name} (${scenario.mode})`;
      const load = doc.createElement('button');
      load.type = 'button';
      load.textContent = 'Load';
      load.dataset.role = 'load-scenario';
      load.dataset.name = scenario.name;
      load.addEventListener('click', () => {
        const next = applySavedScenario(state, scenario);
        Object.assign(state, next);
        writeInputs();
        refresh();
      });
      const remove = doc.createElement('button');
      remove.type = 'button';
      remove.textContent = 'Delete';
      remove.dataset.role = 'delete-scenario';
      remove.dataset.name = scenario.name;
      remove.addEventListener('click', () => {
        saved = deleteScenario(storage, scenario.name);
        renderSavedList();
      });
      item.append(label, load, remove);
      list.appendChild(item);
    }
  };

  pick('[data-role="save-scenario"]').addEventListener('click', () => {
    const nameInput = pick<HTMLInputElement>('[data-role="save-name"]');
    const name = nameInput.value.trim();
    if (!name) return;
    saved = saveScenario(storage, state, name);
    nameInput.value = '';
    renderSavedList();
  });

  // -------------------------------------------------------------------- boot

  writeInputs();
  renderSavedList();
  refresh();

  return {
    root,
    getState: () => state,
    flush: async () => {
      // settle chained request cascades (e.g. shift -> refresh)
      for (let i = 0; i < 4; i += 1) await pending;
    },
    refresh,
  };
};
