/* tslint:disable */
/* eslint-disable */

/**
 * `B_n` at `samples` evenly spaced angles strictly inside `(0, 2π)`,
 * as `[θ₀, B₀, θ₁, B₁, …]`.
 */
export function b_curve(n: number, samples: number): Float64Array;

/**
 * Hull vertex indices, counter-clockwise, of points given as `[x, y, …]`.
 */
export function hull(coords: Float64Array): Uint32Array;

/**
 * Exact `P_D^n` and its decimal, e.g. `1 - 35/(12*pi^2) = 0.7044798810`.
 */
export function p_disk(n: number, digits: number): string;

/**
 * The chord ends and `n` uniform points in the unit-radius segment of
 * angle `θ`, as `[x, y, …]` with the chord ends first.
 */
export function segment_sample(n: number, theta: number, seed: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly b_curve: (a: number, b: number) => [number, number, number, number];
    readonly hull: (a: number, b: number) => [number, number];
    readonly p_disk: (a: number, b: number) => [number, number, number, number];
    readonly segment_sample: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
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
