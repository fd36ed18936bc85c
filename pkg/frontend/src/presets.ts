/** Bundled example protocols, mirroring the server package's named corpus. */

export interface Preset {
    name: string;
    text: string;
}

export const PRESETS: Preset[] = [
    {
        name: 'master-workers',
        text: '(m->w1:t ; w1->m:d) || (m->w2:t ; w2->m:d)',
    },
    {
        name: 'distributed-voting',
        text:
            '((a->b:y || a->c:y) + (a->b:n || a->c:n))' +
            ' || ((b->a:y || b->c:y) + (b->a:n || b->c:n))' +
            ' || ((c->a:y || c->b:y) + (c->a:n || c->b:n))',
    },
    {
        name: 'relay-choice',
        text: 'a->b:x ; (b->c:x + b->d:x) ; c->d:x',
    },
    {
        name: 'nested-choice',
        text: '((a->b:x ; (b->a:x + b->d:x)) + (a->c:x ; (c->a:x + c->d:x))) ; d->a:x',
    },
];
