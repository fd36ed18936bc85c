/**
 * Typed client for the choreography stepping API.
 *
 * The server is the single source of truth: this module never computes
 * enabled events or termination locally, it only records what the server
 * said. Raw response bodies are kept verbatim so that replays can be
 * compared byte for byte.
 */

export type LabelKind = 'send' | 'recv';

export interface Label {
    kind: LabelKind;
    from: string;
    to: string;
    msg: string;
}

export interface EventEntry {
    id: number;
    label: Label;
}

export type BranchChild =
    | { type: 'event'; id: number }
    | { type: 'choice'; branches: BranchNode[] };

export interface BranchNode {
    type: 'node';
    children: BranchChild[];
}

export interface PomsetState {
    events: EventEntry[];
    deps: [number, number][];
    branching: BranchNode;
}

export interface EnabledEntry {
    event: number;
    label: Label;
}

export interface SessionPayload {
    id: string;
    state: PomsetState;
    chor: string;
    enabled: EnabledEntry[];
    terminated: boolean;
}

/** One server response: which event was fired to reach it (null = initial). */
export interface StepRecord {
    event: number | null;
    raw: string;
    payload: SessionPayload;
}

export class ApiError extends Error {
    constructor(readonly status: number, detail: string) {
        super(detail);
        this.name = 'ApiError';
    }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export function labelText(label: Label): string {
    const mark = label.kind === 'send' ? '!' : '?';
    return `${label.from}${label.to}${mark}${label.msg}`;
}

async function call(
    fetcher: FetchLike,
    method: string,
    url: string,
    body?: unknown,
): Promise<{ raw: string; payload: SessionPayload }> {
    const init: RequestInit = { method };
    if (body !== undefined) {
        init.headers = { 'Content-Type': 'application/json' };
        init.body = JSON.stringify(body);
    }
    const resp = await fetcher(url, init);
    const raw = await resp.text();
    if (!resp.ok) {
        let detail = raw;
        try {
            detail = String(JSON.parse(raw).detail ?? raw);
        } catch {
            // non-JSON error body; keep the raw text
        }
        throw new ApiError(resp.status, detail);
    }
    return { raw, payload: raw ? JSON.parse(raw) : undefined };
}

/**
 * A stepping session. Mutations (fire, reset, replayTo) are queued so at
 * most one is in flight at a time; the history always reflects the exact
 * sequence of server payloads since the last reset.
 */
export class SessionClient {
    readonly history: StepRecord[] = [];
    private queue: Promise<unknown> = Promise.resolve();

    private constructor(
        readonly base: string,
        readonly id: string,
        private readonly fetcher: FetchLike,
    ) {}

    static async create(
        base: string,
        text: string,
        unfold = 0,
        fetcher: FetchLike = fetch,
    ): Promise<SessionClient> {
        const { raw, payload } = await call(fetcher, 'POST', `${base}/session`, {
            text,
            unfold,
        });
        const client = new SessionClient(base, payload.id, fetcher);
        client.history.push({ event: null, raw, payload });
        return client;
    }

    get last(): StepRecord {
        const record = this.history[this.history.length - 1];
        if (!record) {
            throw new Error('session has no recorded state');
        }
        return record;
    }

    private enqueue<T>(job: () => Promise<T>): Promise<T> {
        const next = this.queue.then(job, job);
        this.queue = next.then(
            () => undefined,
            () => undefined,
        );
        return next;
    }

    private url(tail: string): string {
        return `${this.base}/session/${this.id}${tail}`;
    }

    /** Re-read the current state without recording a history step. */
    async state(): Promise<StepRecord> {
        const { raw, payload } = await call(this.fetcher, 'GET', this.url('/state'));
        return { event: null, raw, payload };
    }

    fire(event: number): Promise<StepRecord> {
        return this.enqueue(async () => {
            const { raw, payload } = await call(
                this.fetcher,
                'POST',
                this.url('/fire'),
                { event },
            );
            const record = { event, raw, payload };
            this.history.push(record);
            return record;
        });
    }

    reset(): Promise<StepRecord> {
        return this.enqueue(() => this.resetNow());
    }

    /**
     * Undo to a recorded step: reset, then refire the first `step` events
     * of the old history. Step 0 is plain reset.
     */
    replayTo(step: number): Promise<StepRecord> {
        return this.enqueue(async () => {
            if (step < 0 || step >= this.history.length) {
                throw new RangeError(`no recorded step ${step}`);
            }
            const events = this.history
                .slice(1, step + 1)
                .map((record) => record.event as number);
            let record = await this.resetNow();
            for (const event of events) {
                const { raw, payload } = await call(
                    this.fetcher,
                    'POST',
                    this.url('/fire'),
                    { event },
                );
                record = { event, raw, payload };
                this.history.push(record);
            }
            return record;
        });
    }

    dispose(): Promise<void> {
        return this.enqueue(async () => {
            const resp = await this.fetcher(this.url(''), { method: 'DELETE' });
            if (!resp.ok && resp.status !== 404) {
                throw new ApiError(resp.status, await resp.text());
            }
        });
    }

    private async resetNow(): Promise<StepRecord> {
        const { raw, payload } = await call(
            this.fetcher,
            'POST',
            this.url('/reset'),
        );
        const record: StepRecord = { event: null, raw, payload };
        this.history.length = 0;
        this.history.push(record);
        return record;
    }
}
