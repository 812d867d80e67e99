/* tslint:disable */
/* eslint-disable */

/**
 * Property table plus the edge list for drawing.
 */
export function graph_properties(digits: string, n: number, kind: string): string;

/**
 * Star pipeline for oriented graphs, vertex-deletion pipeline for
 * Hamiltonian simple graphs.
 */
export function projection_bound(kind: string, n: number): string;

/**
 * Exact maximum intersecting family with its lexicographically first
 * witness. `k` is only read for `at-most-k-components`.
 */
export function search_max_family(kind: string, n: number, property: string, k?: number | null): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly graph_properties: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly projection_bound: (a: number, b: number, c: number) => [number, number];
    readonly search_max_family: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
