import { ApiClient } from './api.js';
import { initApp } from './app.js';
import { serviceBaseUrl } from './config.js';

const root = document.getElementById('app');
if (!root) throw new Error('missing #app mount point');

initApp(root, new ApiClient(serviceBaseUrl()), window.localStorage);
