/**
 * Deterministic layout of a branching pomset.
 *
 * Events are layered left to right by dependency depth (longest incoming
 * dependency chain). Rows are allocated top to bottom by walking the
 * branching tree, so each choice occupies a contiguous band of rows and
 * is drawn as a dashed cluster box; nested choices nest geometrically.
 * Consecutive events of one dependency chain share a row, which gives
 * choice-free protocols the familiar one-row-per-thread picture.
 */

import type { BranchChild, BranchNode, PomsetState } from './api.js';
import { labelText } from './api.js';

export const BOX_WIDTH = 72;
export const BOX_HEIGHT = 28;
export const COL_GAP = 36;
export const ROW_GAP = 18;
export const MARGIN = 16;
// per nesting level, so an outer cluster box clears the ones inside it
export const CLUSTER_PAD_X = 8;
export const CLUSTER_PAD_Y = 4;

export interface EventBox {
    id: number;
    label: string;
    enabled: boolean;
    column: number;
    row: number;
    x: number;
    y: number;
}

export interface DepArrow {
    from: number;
    to: number;
}

export interface ClusterBox {
    /** nesting depth, 0 for an outermost choice */
    depth: number;
    x: number;
    y: number;
    width: number;
    height: number;
}

export interface GraphModel {
    boxes: EventBox[];
    arrows: DepArrow[];
    clusters: ClusterBox[];
    width: number;
    height: number;
}

function columnOf(
    event: number,
    preds: Map<number, number[]>,
    memo: Map<number, number>,
): number {
    const known = memo.get(event);
    if (known !== undefined) {
        return known;
    }
    memo.set(event, 0); // cycle guard; server states are acyclic
    const depths = (preds.get(event) ?? []).map((p) =>
        columnOf(p, preds, memo) + 1,
    );
    const depth = depths.length ? Math.max(...depths) : 0;
    memo.set(event, depth);
    return depth;
}

interface Placement {
    row: number;
    column: number;
}

export function layoutGraph(state: PomsetState, enabled: number[]): GraphModel {
    const labels = new Map(state.events.map((e) => [e.id, e.label]));
    const enabledSet = new Set(enabled);
    const preds = new Map<number, number[]>();
    for (const [from, to] of state.deps) {
        const into = preds.get(to) ?? [];
        into.push(from);
        preds.set(to, into);
    }
    const columns = new Map<number, number>();
    for (const entry of state.events) {
        columnOf(entry.id, preds, columns);
    }

    const placed = new Map<number, Placement>();
    const clusterRows: { depth: number; top: number; bottom: number }[] = [];
    let nextRow = 0;

    const placeNode = (node: BranchNode, depth: number): void => {
        // rightmost occupied column per row opened inside this node, for
        // packing one dependency chain onto one row
        const rowEdge = new Map<number, number>();
        for (const child of node.children) {
            if (child.type === 'event') {
                const column = columns.get(child.id) ?? 0;
                let row: number | undefined;
                for (const p of preds.get(child.id) ?? []) {
                    const prev = placed.get(p);
                    if (
                        prev &&
                        rowEdge.get(prev.row) === prev.column &&
                        prev.column < column
                    ) {
                        row = row === undefined ? prev.row : Math.min(row, prev.row);
                    }
                }
                if (row === undefined) {
                    row = nextRow;
                    nextRow += 1;
                }
                rowEdge.set(row, column);
                placed.set(child.id, { row, column });
            } else {
                const top = nextRow;
                for (const branch of child.branches) {
                    placeNode(branch, depth + 1);
                }
                clusterRows.push({ depth, top, bottom: nextRow - 1 });
            }
        }
    };
    placeNode(state.branching, 0);

    const levels = clusterRows.length
        ? Math.max(...clusterRows.map((c) => c.depth)) + 1
        : 0;
    const x = (column: number) =>
        MARGIN + levels * CLUSTER_PAD_X + column * (BOX_WIDTH + COL_GAP);
    const y = (row: number) =>
        MARGIN + levels * CLUSTER_PAD_Y + row * (BOX_HEIGHT + ROW_GAP);

    const boxes: EventBox[] = state.events.map((entry) => {
        const spot = placed.get(entry.id) ?? { row: 0, column: 0 };
        return {
            id: entry.id,
            label: labelText(labels.get(entry.id) ?? entry.label),
            enabled: enabledSet.has(entry.id),
            column: spot.column,
            row: spot.row,
            x: x(spot.column),
            y: y(spot.row),
        };
    });
    const byId = new Map(boxes.map((b) => [b.id, b]));

    const clusters: ClusterBox[] = clusterRows.map(({ depth, top, bottom }) => {
        const members = boxes.filter((b) => b.row >= top && b.row <= bottom);
        const minX = Math.min(...members.map((b) => b.x));
        const maxX = Math.max(...members.map((b) => b.x + BOX_WIDTH));
        const padX = CLUSTER_PAD_X * (levels - depth);
        const padY = CLUSTER_PAD_Y * (levels - depth);
        return {
            depth,
            x: minX - padX,
            y: y(top) - padY,
            width: maxX - minX + 2 * padX,
            height: y(bottom) + BOX_HEIGHT + padY - (y(top) - padY),
        };
    });
    // draw outer clusters first so nested ones sit on top
    clusters.sort((a, b) => a.depth - b.depth || a.y - b.y);

    const arrows: DepArrow[] = [...state.deps]
        .filter(([from, to]) => byId.has(from) && byId.has(to))
        .map(([from, to]) => ({ from, to }));

    const rights = [
        ...boxes.map((b) => b.x + BOX_WIDTH),
        ...clusters.map((c) => c.x + c.width),
    ];
    const bottoms = [
        ...boxes.map((b) => b.y + BOX_HEIGHT),
        ...clusters.map((c) => c.y + c.height),
    ];
    const width = MARGIN + Math.max(0, ...rights);
    const height = MARGIN + Math.max(0, ...bottoms);
    return { boxes, arrows, clusters, width, height };
}

/** All choice children of a node, for counting and tests. */
export function choiceCount(node: BranchNode): number {
    let total = 0;
    for (const child of node.children) {
        if (child.type === 'choice') {
            total += 1 + child.branches.reduce((n, b) => n + choiceCount(b), 0);
        }
    }
    return total;
}

export function eventIds(node: BranchNode): number[] {
    const out: number[] = [];
    const walk = (n: BranchNode): void => {
        for (const child of n.children) {
            if (child.type === 'event') {
                out.push(child.id);
            } else {
                child.branches.forEach(walk);
            }
        }
    };
    walk(node);
    return out;
}

export type { BranchChild };
