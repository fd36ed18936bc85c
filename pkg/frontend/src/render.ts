/**
 * Render a laid-out graph model as an SVG string.
 *
 * Pure string construction: no DOM access, so the renderer is unit
 * testable and the page just assigns the result to innerHTML. Enabled
 * events carry class "enabled" and a data-event attribute; the page
 * attaches click handlers to exactly those.
 */

import { BOX_HEIGHT, BOX_WIDTH } from './layout.js';
import type { GraphModel } from './layout.js';

export function escapeXml(text: string): string {
    return text
        .replace(/&/g, '&amp;')
        .replace(/</g, '&lt;')
        .replace(/>/g, '&gt;')
        .replace(/"/g, '&quot;');
}

export function renderSvg(model: GraphModel): string {
    const parts: string[] = [];
    parts.push(
        `<svg xmlns="http://www.w3.org/2000/svg" width="${model.width}" ` +
            `height="${model.height}" viewBox="0 0 ${model.width} ${model.height}">`,
    );
    parts.push(
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" ' +
            'markerWidth="7" markerHeight="7" orient="auto-start-reverse">' +
            '<path d="M 0 0 L 10 5 L 0 10 z" fill="#555"/></marker></defs>',
    );

    for (const cluster of model.clusters) {
        parts.push(
            `<rect class="cluster" data-depth="${cluster.depth}" ` +
                `x="${cluster.x}" y="${cluster.y}" width="${cluster.width}" ` +
                `height="${cluster.height}" rx="6" fill="none" stroke="#888" ` +
                'stroke-dasharray="6 4"/>',
        );
    }

    const byId = new Map(model.boxes.map((b) => [b.id, b]));
    for (const arrow of model.arrows) {
        const from = byId.get(arrow.from);
        const to = byId.get(arrow.to);
        if (!from || !to) {
            continue;
        }
        const x1 = from.x + BOX_WIDTH;
        const y1 = from.y + BOX_HEIGHT / 2;
        const x2 = to.x;
        const y2 = to.y + BOX_HEIGHT / 2;
        parts.push(
            `<line class="dep" x1="${x1}" y1="${y1}" x2="${x2}" y2="${y2}" ` +
                'stroke="#555" marker-end="url(#arrow)"/>',
        );
    }

    for (const box of model.boxes) {
        const classes = box.enabled ? 'event enabled' : 'event';
        parts.push(
            `<g class="${classes}" data-event="${box.id}">` +
                `<rect x="${box.x}" y="${box.y}" width="${BOX_WIDTH}" ` +
                `height="${BOX_HEIGHT}" rx="4" ` +
                `fill="${box.enabled ? '#dff2df' : '#f4f4f4'}" ` +
                `stroke="${box.enabled ? '#2c7a2c' : '#999'}"/>` +
                `<text x="${box.x + BOX_WIDTH / 2}" ` +
                `y="${box.y + BOX_HEIGHT / 2 + 4}" text-anchor="middle" ` +
                `font-family="monospace" font-size="13">` +
                `${escapeXml(box.label)}</text></g>`,
        );
    }

    parts.push('</svg>');
    return parts.join('');
}
