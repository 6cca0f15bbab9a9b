"""Jitted inner loops shared by the codec, synthesizer, decoder and simulator.

All kernels work on int64 symbol arrays and the ``exp``/``log`` tables of a
:class:`~rsbeyond.gf_field.FieldSpec`; ``q1`` is ``q - 1``.  The log of zero
is the sentinel ``2*q1`` and ``exp`` reads zero from there on, so products
need no zero tests.  Status codes
returned by the word decoder are listed in ``STATUS_*``.
"""

import numpy as np
from numba import njit

STATUS_OK = 0
STATUS_NOT_T_VALID = 1
STATUS_T_EXCEEDS_RADIUS = 2
STATUS_SUPPORT_MISMATCH = 3
STATUS_RESIDUAL_NOT_CODEWORD = 4


@njit(cache=True, inline="always")
def gmul(a, b, exp, log):
    return exp[log[a] + log[b]]


@njit(cache=True, inline="always")
def gdiv(a, b, exp, log, q1):
    # b != 0
    return exp[log[a] - log[b] + q1]


@njit(cache=True)
def spectrum_window(logp, exp, q1, step, first, count, out):
    """``out[r] = sum_j p_j * a^((first + r) * j)`` with ``a = exp[step]``.

    ``logp`` holds the discrete logs of the word (``2*q1`` for zero symbols),
    which lets callers raise a word to a power without touching symbols.
    """
    n = logp.shape[0]
    zero = 2 * q1
    for r in range(count):
        out[r] = 0
    for j in range(n):
        lp = logp[j]
        if lp == zero:
            continue
        inc = (j * step) % q1
        pos = (first * inc) % q1
        for r in range(count):
            out[r] ^= exp[lp + pos]
            pos += inc
            if pos >= q1:
                pos -= q1


@njit(cache=True)
def word_logs(word, log, power, q1):
    """Discrete logs of ``word**power`` taken componentwise (``2*q1`` for zeros)."""
    n = word.shape[0]
    out = np.empty(n, dtype=np.int64)
    for j in range(n):
        w = word[j]
        if w == 0:
            out[j] = 2 * q1
        else:
            out[j] = (log[w] * power) % q1
    return out


@njit(cache=True)
def transform(word, exp, log, q1, step, scale):
    """Full length-n transform with root ``exp[step]``, times ``scale``."""
    n = word.shape[0]
    logp = word_logs(word, log, 1, q1)
    out = np.empty(n, dtype=np.int64)
    spectrum_window(logp, exp, q1, step, 0, n, out)
    if scale != 1:
        for i in range(n):
            out[i] = gmul(out[i], scale, exp, log)
    return out


@njit(cache=True)
def encode_batch(info, n, exp, log, q1, inv_step, scale):
    """Evaluation-style encoding of every row of ``info`` (shape B x k).

    Only the ``k`` leading spectral coefficients are nonzero, so the inverse
    transform costs ``n*k`` instead of ``n*n``.
    """
    b, k = info.shape
    out = np.empty((b, n), dtype=np.int64)
    for r in range(b):
        for j in range(n):
            inc = (j * inv_step) % q1
            pos = 0
            acc = 0
            for i in range(k):
                acc ^= exp[log[info[r, i]] + pos]
                pos += inc
                if pos >= q1:
                    pos -= q1
            out[r, j] = gmul(acc, scale, exp, log)
    return out


@njit(cache=True)
def syndrome_rows(word, n, k, l, exp, log, q1, step):
    """Syndrome sequences of the rows ``word**i``, ``i = 1..l``.

    Row ``i`` (0-based ``i-1``) holds ``n - i(k-1) - 1`` values; the result is
    padded with zeros to the first row's length.
    """
    m1 = n - k
    out = np.zeros((l, m1), dtype=np.int64)
    lengths = np.empty(l, dtype=np.int64)
    for i in range(1, l + 1):
        first = i * (k - 1) + 1
        cnt = n - first
        lengths[i - 1] = cnt
        logp = word_logs(word, log, i, q1)
        spectrum_window(logp, exp, q1, step, first, cnt, out[i - 1])
    return out, lengths


@njit(cache=True)
def synthesize_kernel(seqs, lengths, exp, log, q1):
    """Varying-length multi-sequence shift-register synthesis.

    ``seqs[h, :lengths[h]]`` is sequence ``h``; sequences are right-aligned
    against the longest one.  Returns ``(t, lam, ops)`` where ``lam`` has
    length ``m + 1`` and ``ops`` counts field multiplications.

    Polynomials are carried in the log domain alongside their symbols so
    that each multiply is a single table read.
    """
    nseq = seqs.shape[0]
    zero = 2 * q1
    m = 0
    for h in range(nseq):
        if lengths[h] > m:
            m = lengths[h]
    cap = m + 1
    lseq = np.empty(seqs.shape, dtype=np.int64)
    for h in range(nseq):
        for j in range(seqs.shape[1]):
            lseq[h, j] = log[seqs[h, j]]
    lam = np.zeros(cap, dtype=np.int64)
    lam[0] = 1
    llam = np.full(cap, zero, dtype=np.int64)
    llam[0] = 0
    t = 0
    llam_h = np.full((nseq, cap), zero, dtype=np.int64)
    if nseq == 1:
        # Lambda^(1) = 1 is textbook Berlekamp-Massey; it picks the same t but
        # breaks ties differently.  With several sequences the auxiliary
        # polynomials must start at 0 or the result stops being minimal.
        llam_h[0, 0] = 0
    t_h = np.zeros(nseq, dtype=np.int64)
    d_h = np.ones(nseq, dtype=np.int64)
    m_h = np.empty(nseq, dtype=np.int64)
    for h in range(nseq):
        m_h[h] = m - lengths[h]
    tmp = np.empty(cap, dtype=np.int64)
    ops = 0

    for big_m in range(1, m + 1):
        for h in range(nseq):
            off = m - lengths[h]
            if big_m - t > off:
                j = big_m - 1 - off
                d = seqs[h, j]
                for i in range(1, t + 1):
                    d ^= exp[llam[i] + lseq[h, j - i]]
                ops += t
                if d != 0:
                    shift = big_m - m_h[h]
                    lcoef = log[d] - log[d_h[h]] + q1
                    if lcoef >= q1:
                        lcoef -= q1
                    # deg(lam_h[h]) <= t_h[h]
                    top = min(t_h[h] + 1, cap - shift)
                    grow = big_m - t > m_h[h] - t_h[h]
                    if grow:
                        # only the first t+1 entries of an auxiliary are ever read
                        for i in range(t + 1):
                            tmp[i] = llam[i]
                    for i in range(top):
                        v = lam[i + shift] ^ exp[lcoef + llam_h[h, i]]
                        lam[i + shift] = v
                        llam[i + shift] = log[v]
                    ops += top
                    if grow:
                        t_old = t
                        t = big_m - (m_h[h] - t_h[h])
                        t_h[h] = t_old
                        for i in range(t_old + 1):
                            llam_h[h, i] = tmp[i]
                        d_h[h] = d
                        m_h[h] = big_m
                    if lam[0] != 1:
                        raise AssertionError("connection polynomial lost its unit constant term")
    return t, lam, ops


@njit(cache=True)
def locate(lam, t, n, exp, log, q1, step, positions):
    """Write positions ``j`` with ``lam(a^-j) = 0`` into ``positions``.

    Returns the number found, or -1 if ``deg(lam) != t``.
    """
    deg = -1
    for i in range(lam.shape[0] - 1, -1, -1):
        if lam[i] != 0:
            deg = i
            break
    if deg != t:
        return -1
    found = 0
    for j in range(n):
        # evaluate at a^{-j}: exponent of the i-th term is -i*j*step
        base = (q1 - (j * step) % q1) % q1
        acc = 0
        pos = 0
        for i in range(t + 1):
            acc ^= exp[log[lam[i]] + pos]
            pos += base
            if pos >= q1:
                pos -= q1
        if acc == 0:
            if found < positions.shape[0]:
                positions[found] = j
            found += 1
    return found


@njit(cache=True)
def evaluate_kernel(synd1, lam, t, n, k, exp, log, q1, step, scale):
    """Recursive extension of ``E_k..E_{n-1} = synd1`` to all n spectral
    coefficients, followed by the inverse transform."""
    spec = np.zeros(n, dtype=np.int64)
    for j in range(n - k):
        spec[k + j] = synd1[j]
    # walk cyclically from index n to n + k - 1
    for jj in range(n, n + k):
        acc = 0
        for h in range(1, t + 1):
            acc ^= gmul(lam[h], spec[(jj - h) % n], exp, log)
        spec[jj % n] = acc
    inv_step = (q1 - step) % q1
    return transform(spec, exp, log, q1, inv_step, scale)


@njit(cache=True)
def decode_word(y, n, k, l, t_max, exp, log, q1, step, scale):
    """Decode one received word.

    Returns ``(status, t, error_word)``; the error word is only meaningful
    for ``STATUS_OK``.
    """
    seqs, lengths = syndrome_rows(y, n, k, l, exp, log, q1, step)
    t, lam, _ = synthesize_kernel(seqs, lengths, exp, log, q1)
    err = np.zeros(n, dtype=np.int64)
    if t > t_max:
        return STATUS_T_EXCEEDS_RADIUS, t, err
    positions = np.empty(t + 1, dtype=np.int64)
    found = locate(lam, t, n, exp, log, q1, step, positions)
    if found != t:
        return STATUS_NOT_T_VALID, t, err
    if t == 0:
        return STATUS_OK, 0, err
    err = evaluate_kernel(seqs[0], lam, t, n, k, exp, log, q1, step, scale)
    weight = 0
    for j in range(n):
        if err[j] != 0:
            weight += 1
    if weight != t:
        return STATUS_SUPPORT_MISMATCH, t, err
    for i in range(t):
        if err[positions[i]] == 0:
            return STATUS_SUPPORT_MISMATCH, t, err
    return STATUS_OK, t, err


@njit(cache=True)
def decode_batch(words, n, k, l, t_max, exp, log, q1, step, scale):
    """Decode each row of ``words``; returns (status, t, decoded words)."""
    b = words.shape[0]
    status = np.empty(b, dtype=np.int64)
    ts = np.empty(b, dtype=np.int64)
    out = np.empty_like(words)
    for r in range(b):
        st, t, err = decode_word(words[r], n, k, l, t_max, exp, log, q1, step, scale)
        status[r] = st
        ts[r] = t
        for j in range(n):
            out[r, j] = words[r, j] ^ err[j]
    return status, ts, out
