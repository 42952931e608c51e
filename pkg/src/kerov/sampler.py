"""Fast floating-point sampler for Kerov growth paths.

Transition weights use the interlacing form of the transition measure: with
``x_k`` the alpha-contents of the addable boxes and ``y_i = alpha*col - row``
over the removable boxes, the box at ``x_k`` is added with probability
``prod_i (x_k - y_i) / prod_{l != k} (x_k - x_l)``. Sample ``i`` always draws
its uniforms from ``SeedSequence(seed, spawn_key=(i,))``, so results do not
depend on chunking or on the number of worker threads.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numba import njit

from kerov.errors import DomainError
from kerov.partitions import Partition

DEFAULT_CHUNK = 2048


def thread_count(threads: int | None = None) -> int:
    """Explicit value, else ``KEROV_THREADS``, else the number of usable CPUs."""
    if threads is None:
        env = os.environ.get("KEROV_THREADS")
        if env:
            threads = int(env)
        else:
            threads = len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)
    if threads < 1:
        raise DomainError("thread count must be positive")
    return threads


@njit(nogil=True, cache=True)
def _corners(parts, nrows, alpha, xs, rows):
    """Fill addable corners (alpha-content, 0-based row); return how many there are."""
    k = 0
    for i in range(nrows + 1):
        if i == 0 or parts[i - 1] > parts[i]:
            xs[k] = alpha * parts[i] - i
            rows[k] = i
            k += 1
    return k


@njit(nogil=True, cache=True)
def _corner_prob(a, k, xs, ys):
    xa = xs[a]
    num = 1.0
    den = 1.0
    for b in range(k - 1):
        num *= xa - ys[b]
    for b in range(k):
        if b != a:
            den *= xa - xs[b]
    return num / den


@njit(nogil=True, cache=True)
def _removables(parts, alpha, k, rows, ys):
    # The removable box in row rows[b+1]-1 sits between addable corners b and b+1.
    for b in range(k - 1):
        r = rows[b + 1] - 1
        ys[b] = alpha * parts[r] - (r + 1)


@njit(nogil=True, cache=True)
def _probabilities(parts, nrows, alpha, xs, rows, probs):
    k = _corners(parts, nrows, alpha, xs, rows)
    ys = np.empty(k)
    _removables(parts, alpha, k, rows, ys)
    for a in range(k):
        probs[a] = _corner_prob(a, k, xs, ys)
    return k


@njit(nogil=True, cache=True)
def _choose(k, probs, u):
    acc = 0.0
    for a in range(k - 1):
        acc += probs[a]
        if u < acc:
            return a
    return k - 1


@njit(nogil=True, cache=True)
def _walk(u, alpha, rows_out, xs_out):
    """Grow one path per row of ``u``; record the 0-based row and alpha-content of every added box.

    Adding a box at alpha-content ``xa`` multiplies the Cauchy transform of the
    transition measure by ``(z-xa)(z-xa-alpha+1) / ((z-xa-alpha)(z-xa+1))``, so
    corners that survive are rescaled by that factor at their position and only
    newly created corners need a fresh product.
    """
    m, n = u.shape
    parts = np.zeros(n + 2, np.int64)
    xs = np.empty(n + 2)
    probs = np.empty(n + 2)
    rows = np.empty(n + 2, np.int64)
    xs2 = np.empty(n + 2)
    probs2 = np.empty(n + 2)
    rows2 = np.empty(n + 2, np.int64)
    ys = np.empty(n + 2)
    for s in range(m):
        parts[:] = 0
        xs[0] = 0.0
        probs[0] = 1.0
        rows[0] = 0
        nrows = 0
        k = 1
        for t in range(n):
            a = _choose(k, probs, u[s, t])
            r = rows[a]
            xa = xs[a]
            rows_out[s, t] = r
            xs_out[s, t] = xa
            parts[r] += 1
            if r == nrows:
                nrows += 1
            k2 = _corners(parts, nrows, alpha, xs2, rows2)
            _removables(parts, alpha, k2, rows2, ys)
            j = 0
            for b in range(k2):
                while j < k and rows[j] < rows2[b]:
                    j += 1
                if j < k and rows[j] == rows2[b] and rows2[b] != r:
                    z = xs2[b] - xa
                    probs2[b] = probs[j] * z * (z - alpha + 1.0) / ((z - alpha) * (z + 1.0))
                else:
                    probs2[b] = _corner_prob(b, k2, xs2, ys)
            for b in range(k2):
                xs[b] = xs2[b]
                probs[b] = probs2[b]
                rows[b] = rows2[b]
            k = k2


@njit(nogil=True, cache=True)
def _variance_kernel(rows_in, p, q, checkpoints, scaled):
    """Exact integer ``sum_{j<=n} q^2 s_2(lambda(j-1))`` along each path, at each checkpoint.

    With ``X = q*x`` and ``Y = q*y`` integers, ``q^2 s_2 = (P_2 + P_1^2)/2`` where
    ``P_r = sum X_k^r - sum Y_i^r``; the diagram is rescanned at every step.
    """
    m, n = rows_in.shape
    parts = np.zeros(n + 2, np.int64)
    for s in range(m):
        parts[:] = 0
        nrows = 0
        acc = 0
        c = 0
        for t in range(n):
            p1 = 0
            p2 = 0
            for i in range(nrows + 1):
                if i == 0 or parts[i - 1] > parts[i]:
                    xq = p * parts[i] - q * i
                    p1 += xq
                    p2 += xq * xq
                if i < nrows and (i == nrows - 1 or parts[i + 1] < parts[i]):
                    yq = p * parts[i] - q * (i + 1)
                    p1 -= yq
                    p2 -= yq * yq
            acc += (p2 + p1 * p1) // 2
            r = rows_in[s, t]
            parts[r] += 1
            if r == nrows:
                nrows += 1
            while c < checkpoints.shape[0] and checkpoints[c] == t + 1:
                scaled[s, c] = acc
                c += 1


def corner_probabilities(lam: Partition, alpha: float) -> np.ndarray:
    """Float transition probabilities from ``lam``, addable corners listed top row first."""
    lam = tuple(lam)
    size = len(lam) + 2
    parts = np.zeros(size, np.int64)
    parts[: len(lam)] = lam
    xs, rows, probs = np.empty(size), np.empty(size, np.int64), np.empty(size)
    k = _probabilities(parts, len(lam), float(alpha), xs, rows, probs)
    return probs[:k].copy()


def uniforms(seed: int, start: int, count: int, n: int) -> np.ndarray:
    out = np.empty((count, n))
    for k in range(count):
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(start + k,))))
        out[k] = rng.random(n)
    return out


def _run_chunks(samples: int, threads: int | None, chunk: int, work) -> None:
    spans = [(a, min(a + chunk, samples)) for a in range(0, samples, chunk)]
    workers = thread_count(threads)
    if workers == 1 or len(spans) == 1:
        for a, b in spans:
            work(a, b)
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for f in [pool.submit(work, a, b) for a, b in spans]:
            f.result()


def _validate(n: int, alpha: float, samples: int) -> None:
    if n < 0 or samples < 0:
        raise DomainError("n and samples must be nonnegative")
    if not alpha > 0:
        raise DomainError("alpha must be positive")


def _paths(n, alpha, seed, a, b):
    rows = np.empty((b - a, n), np.int64)
    xs = np.empty((b - a, n))
    _walk(uniforms(seed, a, b - a, n), float(alpha), rows, xs)
    return rows, xs


def grow(n: int, alpha: float, samples: int, seed: int, threads: int | None = None, chunk: int = DEFAULT_CHUNK):
    """Sample growth paths to size ``n``; returns 1-based ``(rows, cols)`` of the added boxes, shape ``(samples, n)``."""
    _validate(n, alpha, samples)
    rows = np.zeros((samples, n), np.int32)
    cols = np.zeros((samples, n), np.int32)

    def work(a, b):
        r, x = _paths(n, alpha, seed, a, b)
        rows[a:b] = r + 1
        # x = alpha*(col-1) - (row-1); round away float error before casting
        cols[a:b] = np.rint((x + r) / alpha).astype(np.int32) + 1

    _run_chunks(samples, threads, chunk, work)
    return rows, cols


def _checkpoint_array(checkpoints) -> np.ndarray:
    cps = np.array(sorted(set(int(c) for c in checkpoints)), np.int64)
    if len(cps) and cps[0] < 1:
        raise DomainError("checkpoints must be positive sizes")
    return cps


def content_checkpoints(
    checkpoints, alpha: float, samples: int, seed: int, power: float = 2.0, threads: int | None = None, chunk: int = DEFAULT_CHUNK
):
    """One nested path per sample, read off at each size in ``checkpoints``.

    Returns ``(sums, power_sums)`` of shape ``(samples, len(checkpoints))``: the
    alpha-content sum of the diagram and the sum of ``|c_alpha|**power`` over its boxes.
    """
    cps = _checkpoint_array(checkpoints)
    n = int(cps[-1]) if len(cps) else 0
    _validate(n, alpha, samples)
    sums = np.zeros((samples, len(cps)))
    psums = np.zeros((samples, len(cps)))
    if not len(cps):
        return sums, psums

    def work(a, b):
        _, x = _paths(n, alpha, seed, a, b)
        sums[a:b] = np.cumsum(x, axis=1)[:, cps - 1]
        psums[a:b] = np.cumsum(np.abs(x) ** power, axis=1)[:, cps - 1]

    _run_chunks(samples, threads, chunk, work)
    return sums, psums


def variance_sums(checkpoints, alpha_num: int, alpha_den: int, samples: int, seed: int, threads: int | None = None):
    """Exact ``q^2 * sum_{j=1}^n s_2(lambda(j-1))`` along sampled paths (``alpha = p/q``), as int64."""
    cps = _checkpoint_array(checkpoints)
    n = int(cps[-1]) if len(cps) else 0
    alpha = alpha_num / alpha_den
    _validate(n, alpha, samples)
    out = np.zeros((samples, len(cps)), np.int64)

    def work(a, b):
        rows, _ = _paths(n, alpha, seed, a, b)
        _variance_kernel(rows, alpha_num, alpha_den, cps, out[a:b])

    _run_chunks(samples, threads, DEFAULT_CHUNK, work)
    return out
