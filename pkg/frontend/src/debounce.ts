export type Debounced<A extends unknown[]> = ((...args: A) => void) & { cancel: () => void };

/** Trailing-edge debounce: a burst of calls runs the function once. */
export const debounce = <A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
): Debounced<A> => {
  let timer: ReturnType<typeof setTimeout> | null = null;
  const wrapped = (...args: A) => {
    if (timer !== null) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = null;
      fn(...args);
    }, waitMs);
  };
  wrapped.cancel = () => {
    if (timer !== null) clearTimeout(timer);
    timer = null;
  };
  return wrapped;
};
