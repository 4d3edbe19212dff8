#!/usr/bin/env python3
"""Generate a table of the first N nontrivial Riemann zeta zero ordinates.

Method: Euler-Maclaurin evaluation of zeta(1/2+it), rotated by the
Riemann-Siegel theta function to Hardy's real Z(t).  Phases t*log(n) are
accumulated in 80-bit extended precision before reduction mod 2*pi, which
keeps the absolute phase error below ~1e-13 up to t ~ 1e5.  Sign changes of
Z are bracketed on an adaptive grid (with subdivision wherever |Z| dips
without crossing, so close pairs are not skipped), polished with the
Illinois method, and the few ill-conditioned roots are re-done with mpmath.

The result is cross-checked against mpmath.zetazero at a set of indices and
against the zero-counting function before anything is written.

Usage: generate_zeros.py --count 100000 --out data/zeros_100k.txt
"""

import argparse
import multiprocessing as mp_proc
import sys
import time
from fractions import Fraction

import numpy as np

LD = np.longdouble
PI_LD = LD("3.14159265358979323846264338327950288")
TWO_PI_LD = LD(2) * PI_LD
LOG_2PI_LD = np.log(TWO_PI_LD)

# B_{2k} for k = 1..16, exact.
_BERN = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
    Fraction(43867, 798), Fraction(-174611, 330), Fraction(854513, 138),
    Fraction(-236364091, 2730), Fraction(8553103, 6),
    Fraction(-23749461029, 870), Fraction(8615841276005, 14322),
    Fraction(-7709321041217, 510),
]
BERN_RATIO = np.array(
    [float(_BERN[k + 1] / _BERN[k]) for k in range(len(_BERN) - 1)])
B2 = float(_BERN[0])

N_MAX = 33280
_LOGN = None    # log(n) in longdouble, lazily built per process
_INVSQ = None   # n^{-1/2} in float64


def _tables():
    global _LOGN, _INVSQ
    if _LOGN is None:
        n = np.arange(0, N_MAX + 1, dtype=LD)
        n[0] = 1
        _LOGN = np.log(n)
        _INVSQ = np.arange(0, N_MAX + 1, dtype=np.float64)
        _INVSQ[0] = 1
        _INVSQ = 1.0 / np.sqrt(_INVSQ)
    return _LOGN, _INVSQ


def n_for(tmax):
    """Euler-Maclaurin cutoff, quantized so evaluation batches share N."""
    n = int(0.42 * tmax) + 64
    return min(N_MAX, ((n // 512) + 1) * 512)


def theta(t):
    """Riemann-Siegel theta, reduced mod 2*pi."""
    tl = np.asarray(t, dtype=np.float64).astype(LD)
    x = (tl / 2) * (np.log(tl) - LOG_2PI_LD) - tl / 2 - PI_LD / 8 \
        + 1 / (48 * tl) + 7 / (5760 * tl**3) + 31 / (80640 * tl**5)
    x -= np.round(x / TWO_PI_LD) * TWO_PI_LD
    return x.astype(np.float64)


def hardy_z(t, N):
    """Z(t) for a batch of t (float64 array), shared cutoff N."""
    logn, invsq = _tables()
    tl = np.asarray(t, dtype=np.float64).astype(LD)
    ph = np.multiply.outer(tl, logn[1:N])
    ph -= np.round(ph / TWO_PI_LD) * TWO_PI_LD
    ph64 = ph.astype(np.float64)
    del ph
    c = invsq[1:N]
    z = (c * np.cos(ph64)).sum(axis=1) - 1j * (c * np.sin(ph64)).sum(axis=1)
    del ph64

    t64 = np.asarray(t, dtype=np.float64)
    s = 0.5 + 1j * t64
    phN = tl * logn[N]
    phN -= np.round(phN / TWO_PI_LD) * TWO_PI_LD
    eN = np.exp(-1j * phN.astype(np.float64))
    z += eN * (N ** -0.5) / 2
    z += eN * np.sqrt(N) / (s - 1)

    # Bernoulli corrections, built iteratively.
    term = (B2 / 2.0) * s * eN * (N ** -1.5)
    z += term
    twok = 2
    for k in range(len(BERN_RATIO)):
        term = term * BERN_RATIO[k] * (s + twok - 1) * (s + twok) \
            / ((twok + 1) * (twok + 2)) / (N * N)
        z += term
        twok += 2
        if np.max(np.abs(term)) < 1e-18:
            break

    rot = np.exp(1j * theta(t64))
    w = rot * z
    imax = float(np.max(np.abs(w.imag)))
    if imax > 1e-7:
        raise RuntimeError(f"Z(t) lost realness: max |Im| = {imax:g}")
    return w.real


def eval_many(ts):
    """Z at arbitrary sorted points, batching by quantized cutoff."""
    ts = np.asarray(ts, dtype=np.float64)
    out = np.empty_like(ts)
    i = 0
    while i < len(ts):
        j = min(i + 128, len(ts))
        N = n_for(ts[i:j].max())
        out[i:j] = hardy_z(ts[i:j], N)
        i = j
    return out


def scan_grid(ta, tb):
    """Adaptive scan grid over [ta, tb], ~3.2 samples per mean zero gap."""
    pieces = []
    t = ta
    while t < tb:
        gap = 2 * np.pi / np.log(max(t, 18.0) / (2 * np.pi))
        step = min(1.2, gap / 3.2)
        seg_end = min(t + 4096 * step, tb)
        pieces.append(np.arange(t, seg_end, step))
        t = seg_end
    g = np.concatenate(pieces)
    return np.append(g, tb)


def find_brackets(ta, tb):
    """All sign-change brackets of Z in [ta, tb].

    Intervals where |Z| dips without a sign change are refined around the
    dip, so that close zero pairs hiding between grid points are found.
    """
    T = scan_grid(ta, tb)
    Z = eval_many(T)
    brackets = []
    susp = []
    for i in range(len(T) - 1):
        if Z[i] * Z[i + 1] < 0:
            brackets.append((T[i], T[i + 1], Z[i], Z[i + 1]))
        elif min(abs(Z[i]), abs(Z[i + 1])) < 0.35:
            susp.append((T[i], T[i + 1], Z[i], Z[i + 1], 0))
    while susp:
        xs = np.concatenate([np.linspace(a, b, 17)[1:-1]
                             for (a, b, _, _, _) in susp])
        order = np.argsort(xs)
        vals = np.empty_like(xs)
        vals[order] = eval_many(xs[order])
        nxt = []
        pos = 0
        for (a, b, fa, fb, depth) in susp:
            pts = np.linspace(a, b, 17)
            fs = np.empty(17)
            fs[0], fs[-1] = fa, fb
            fs[1:-1] = vals[pos:pos + 15]
            pos += 15
            had_sc = False
            for i in range(16):
                if fs[i] * fs[i + 1] < 0:
                    brackets.append((pts[i], pts[i + 1], fs[i], fs[i + 1]))
                    had_sc = True
            if not had_sc and depth < 6 and (b - a) > 1e-5:
                k = int(np.argmin(np.abs(fs)))
                if abs(fs[k]) < 0.03:
                    lo, hi = max(0, k - 1), min(16, k + 1)
                    nxt.append((pts[lo], pts[hi], fs[lo], fs[hi], depth + 1))
        susp = nxt
    brackets.sort(key=lambda q: q[0])
    return brackets


def illinois(brackets, tol=2e-11, max_iter=60):
    """Vectorized Illinois iteration on a list of brackets."""
    a = np.array([q[0] for q in brackets])
    b = np.array([q[1] for q in brackets])
    fa = np.array([q[2] for q in brackets])
    fb = np.array([q[3] for q in brackets])
    slope = np.abs((fb - fa) / (b - a))
    for _ in range(max_iter):
        act = (b - a) > tol
        if not act.any():
            break
        x = b - fb * (b - a) / (fb - fa)
        w = b - a
        x = np.clip(x, a + 1e-3 * w, b - 1e-3 * w)
        xs = x[act]
        order = np.argsort(xs)
        fx_s = np.empty_like(xs)
        fx_s[order] = eval_many(xs[order])
        fx = np.empty_like(x)
        fx[act] = fx_s
        same = np.sign(fx) == np.sign(fa)
        upd_a = act & same
        upd_b = act & ~same
        a[upd_a] = x[upd_a]
        fa[upd_a] = fx[upd_a]
        # Illinois damping on the stagnant end
        fb[upd_a & (np.abs(fx) > 0)] *= 0.5
        b[upd_b] = x[upd_b]
        fb[upd_b] = fx[upd_b]
        fa[upd_b & (np.abs(fx) > 0)] *= 0.5
        slope[act] = np.maximum(slope[act], np.abs(
            (fb[act] - fa[act]) / (b[act] - a[act])))
    mid = (a + b) / 2
    err = (b - a) / 2 + 1e-13 / np.maximum(slope, 1e-3)
    return mid, err, slope


def polish_mpmath(t0, halfwidth):
    """Certified re-bracketing of one zero with mpmath's siegelz."""
    import mpmath as mp
    mp.mp.dps = 20
    a, b = t0 - halfwidth, t0 + halfwidth
    fa, fb = mp.siegelz(a), mp.siegelz(b)
    widen = 0
    while fa * fb > 0 and widen < 6:
        a, b = t0 - halfwidth * 4, t0 + halfwidth * 4
        halfwidth *= 4
        fa, fb = mp.siegelz(a), mp.siegelz(b)
        widen += 1
    if fa * fb > 0:
        raise RuntimeError(f"mpmath polish failed to bracket near {t0}")
    while b - a > 1e-12:
        m = (a + b) / 2
        fm = mp.siegelz(m)
        if fm == 0:
            return float(m)
        if fa * fm < 0:
            b, fb = m, fm
        else:
            a, fa = m, fm
    return float((a + b) / 2)


def worker(args):
    ta, tb = args
    brackets = find_brackets(ta, tb)
    if not brackets:
        return []
    mids, errs, slopes = illinois(brackets)
    zeros = []
    n_polished = 0
    for m, e, sl in zip(mids, errs, slopes):
        if e > 1.5e-10 or sl < 0.1:
            m = polish_mpmath(float(m), max(float(e) * 2, 1e-9))
            n_polished += 1
        zeros.append(float(m))
    print(f"  [{ta:.0f},{tb:.0f}): {len(zeros)} zeros, "
          f"{n_polished} mpmath-polished", flush=True)
    return zeros


def count_below(T):
    """theta(T)/pi + 1, the S(T)-free zero count estimate."""
    th = float(theta(np.array([T]))[0])
    tl = LD(T)
    full = (tl / 2) * (np.log(tl) - LOG_2PI_LD) - tl / 2 - PI_LD / 8 \
        + 1 / (48 * tl)
    return float(full) / np.pi + 1


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=100000)
    ap.add_argument("--out", default="data/zeros_100k.txt")
    ap.add_argument("--t-end", type=float, default=74922.5)
    ap.add_argument("--jobs", type=int, default=2)
    ap.add_argument("--spot-checks", type=int, default=120)
    args = ap.parse_args()

    t0 = time.time()
    # Split [10, t_end] into chunks of roughly equal cost (cost ~ t * dN).
    edges = [10.0]
    n_chunks = max(4, args.jobs * 4)
    total_cost = args.t_end ** 2
    for i in range(1, n_chunks):
        edges.append(np.sqrt(total_cost * i / n_chunks))
    edges.append(args.t_end)
    chunks = [(edges[i], edges[i + 1]) for i in range(len(edges) - 1)]

    print(f"scanning {len(chunks)} chunks on {args.jobs} processes",
          flush=True)
    if args.jobs > 1:
        with mp_proc.Pool(args.jobs) as pool:
            results = pool.map(worker, chunks)
    else:
        results = [worker(c) for c in chunks]

    zeros = sorted(z for sub in results for z in sub)
    # Remove duplicates from chunk-boundary overlap, if any.
    dedup = [zeros[0]]
    for z in zeros[1:]:
        if z - dedup[-1] > 1e-6:
            dedup.append(z)
    zeros = dedup
    print(f"found {len(zeros)} zeros in {time.time()-t0:.0f}s", flush=True)

    if len(zeros) < args.count:
        print(f"FATAL: only {len(zeros)} zeros found, need {args.count}")
        sys.exit(1)
    zeros = zeros[:args.count]

    # --- verification gate ---------------------------------------------
    import mpmath as mp
    mp.mp.dps = 20
    ok = True

    # (1) completeness: count below a healthy boundary point
    boundary = (zeros[-1] + (zeros[-1] + 1.2)) / 2 if len(zeros) == args.count \
        else zeros[-1] + 0.3
    est = count_below(zeros[-1] + 0.55)
    print(f"count check: N ~ {est:.3f} vs {args.count}")
    if abs(est - args.count) > 2.5:
        print("FATAL: zero count disagrees with counting function")
        ok = False

    # (2) known indices against mpmath.zetazero
    check_idx = [1, 2, 3, 10, 100, 1000, 10000, 50000, args.count]
    for n in check_idx:
        if n > len(zeros):
            continue
        ref = float(mp.zetazero(n).imag)
        got = zeros[n - 1]
        if abs(ref - got) > 3e-10:
            print(f"FATAL: zero #{n}: {got:.12f} vs mpmath {ref:.12f}")
            ok = False
        else:
            print(f"zero #{n}: {got:.10f} agrees with mpmath")

    # (3) random spot checks: siegelz must change sign across +-2e-9
    rng = np.random.default_rng(12345)
    idxs = rng.choice(len(zeros), size=min(args.spot_checks, len(zeros)),
                      replace=False)
    bad = 0
    for i in sorted(idxs):
        z = zeros[i]
        if mp.siegelz(z - 4.5e-10) * mp.siegelz(z + 4.5e-10) > 0:
            print(f"spot check FAILED at index {i+1} ({z:.9f})")
            bad += 1
    print(f"spot checks: {len(idxs) - bad}/{len(idxs)} passed")
    if bad:
        ok = False

    if not ok:
        sys.exit(1)

    with open(args.out, "w") as f:
        f.write("# First {} nontrivial zeros of the Riemann zeta function\n"
                .format(args.count))
        f.write("# imaginary parts, one per line, 10 decimal places\n")
        for z in zeros:
            f.write(f"{z:.10f}\n")
    print(f"wrote {args.out} in {time.time()-t0:.0f}s total")


if __name__ == "__main__":
    main()
