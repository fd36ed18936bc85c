/**
 * Page wiring: load a choreography into a server session, draw the
 * branching pomset, and let the user steer the protocol by clicking
 * enabled events. Every indication on screen is copied from the last
 * server payload; nothing is computed locally.
 */

import { ApiError, SessionClient, labelText } from './api.js';
import type { StepRecord } from './api.js';
import { layoutGraph } from './layout.js';
import { renderSvg } from './render.js';
import { PRESETS } from './presets.js';

function el<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id);
    if (!node) {
        throw new Error(`missing element #${id}`);
    }
    return node as T;
}

const serverInput = el<HTMLInputElement>('server');
const presetSelect = el<HTMLSelectElement>('preset');
const textInput = el<HTMLTextAreaElement>('text');
const unfoldInput = el<HTMLInputElement>('unfold');
const loadButton = el<HTMLButtonElement>('load');
const resetButton = el<HTMLButtonElement>('reset');
const errorBanner = el<HTMLDivElement>('error');
const statusBanner = el<HTMLDivElement>('status');
const chorLine = el<HTMLDivElement>('chor');
const graphHost = el<HTMLDivElement>('graph');
const historyList = el<HTMLOListElement>('history');

let client: SessionClient | null = null;
let busy = false;

for (const preset of PRESETS) {
    const option = document.createElement('option');
    option.value = preset.text;
    option.textContent = preset.name;
    presetSelect.appendChild(option);
}
presetSelect.addEventListener('change', () => {
    textInput.value = presetSelect.value;
});
const first = PRESETS[0];
if (first) {
    textInput.value = first.text;
}

function showError(message: string): void {
    errorBanner.textContent = message;
    errorBanner.hidden = message === '';
}

function draw(record: StepRecord): void {
    const payload = record.payload;
    chorLine.textContent = payload.chor;
    const model = layoutGraph(
        payload.state,
        payload.enabled.map((e) => e.event),
    );
    graphHost.innerHTML = renderSvg(model);
    statusBanner.hidden = !payload.terminated;

    // clickable set = the server's enabled list, nothing else
    for (const node of graphHost.querySelectorAll<SVGGElement>('g.enabled')) {
        node.addEventListener('click', () => {
            void fireEvent(Number(node.dataset.event));
        });
    }

    historyList.innerHTML = '';
    if (client) {
        const history = client.history;
        history.forEach((step, index) => {
            // a fired event's label lives in the previous payload's enabled list
            const before = history[index - 1];
            const entry = before?.payload.enabled.find(
                (e) => e.event === step.event,
            );
            const item = document.createElement('li');
            item.textContent = entry ? labelText(entry.label) : 'initial';
            item.addEventListener('click', () => {
                void replayTo(index);
            });
            historyList.appendChild(item);
        });
    }
}

async function guard(work: () => Promise<void>): Promise<void> {
    if (busy) {
        return;
    }
    busy = true;
    try {
        showError('');
        await work();
    } catch (err) {
        if (err instanceof ApiError && err.status === 409 && client) {
            showError('no longer enabled; state refreshed');
            draw(await client.state());
        } else if (err instanceof ApiError) {
            showError(err.message);
        } else {
            showError(String(err));
        }
    } finally {
        busy = false;
    }
}

async function load(): Promise<void> {
    await guard(async () => {
        if (client) {
            await client.dispose().catch(() => undefined);
            client = null;
        }
        client = await SessionClient.create(
            serverInput.value.replace(/\/$/, ''),
            textInput.value,
            Number(unfoldInput.value) || 0,
        );
        draw(client.last);
    });
}

async function fireEvent(event: number): Promise<void> {
    await guard(async () => {
        if (!client) {
            return;
        }
        draw(await client.fire(event));
    });
}

async function replayTo(step: number): Promise<void> {
    await guard(async () => {
        if (!client) {
            return;
        }
        draw(await client.replayTo(step));
    });
}

loadButton.addEventListener('click', () => {
    void load();
});
resetButton.addEventListener('click', () => {
    void replayTo(0);
});
