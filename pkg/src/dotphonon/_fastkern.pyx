# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot loops.

C implementations of the two inner loops that dominate runtime: the
per-grid-point eigensolve/rate pipeline used by parameter sweeps, and the
mode-sum accumulation behind the discrete-bath spectrum oracle. The
arithmetic mirrors the pure-Python fallback (`_purekern`) step for step so
the two backends agree to rounding.
"""

import numpy as np

from libc.math cimport INFINITY, NAN, cos, exp, expm1, fabs, fmin, isfinite, pow, sin, sqrt

cdef double HBAR = 0.6582119569
cdef double KB = 86.17333262
cdef double PI = 3.14159265358979323846
cdef double OFFDIAG_REL_TOL = 1e-14
cdef double DEGENERATE_REL_TOL = 1e-12
cdef double DEGENERACY_TOL_UEV = 1e-9
cdef double NEAR_DEGENERATE_WARN_UEV = 1e-6

NAME = "compiled"

STATUS_OK = 0
STATUS_DEGENERATE = 1
STATUS_NONPOSITIVE_EQ = 2
STATUS_INVALID = 3

WARN_REGIME = 1
WARN_NEAR_DEGENERATE = 2


cdef void _rotate(double a[3][3], double v[3][3], int p, int q) noexcept nogil:
    cdef double apq = a[p][q]
    cdef double g, tau, t, c, s, arp, arq, vip, viq
    cdef int r, i
    if apq == 0.0:
        return
    g = 100.0 * fabs(apq)
    if fabs(a[p][p]) + g == fabs(a[p][p]) and fabs(a[q][q]) + g == fabs(a[q][q]):
        a[p][q] = 0.0
        a[q][p] = 0.0
        return
    tau = (a[q][q] - a[p][p]) / (2.0 * apq)
    if tau >= 0.0:
        t = 1.0 / (tau + sqrt(1.0 + tau * tau))
    else:
        t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
    c = 1.0 / sqrt(1.0 + t * t)
    s = t * c
    a[p][p] -= t * apq
    a[q][q] += t * apq
    a[p][q] = 0.0
    a[q][p] = 0.0
    r = 3 - p - q
    arp = a[r][p]
    arq = a[r][q]
    a[r][p] = c * arp - s * arq
    a[p][r] = a[r][p]
    a[r][q] = s * arp + c * arq
    a[q][r] = a[r][q]
    for i in range(3):
        vip = v[i][p]
        viq = v[i][q]
        v[i][p] = c * vip - s * viq
        v[i][q] = s * vip + c * viq


cdef void _sign_convention(double u[3][3], int k) noexcept nogil:
    cdef int best = 0, i
    for i in range(1, 3):
        if fabs(u[i][k]) > fabs(u[best][k]):
            best = i
    if u[best][k] < 0.0:
        for i in range(3):
            u[i][k] = -u[i][k]


cdef void _canonicalize_degenerate(double w[3], double u[3][3], double scale) noexcept nogil:
    cdef double tol = DEGENERATE_REL_TOL * scale
    cdef int start = 0, stop, size, axis, nrep, i, j, k
    cdef double basis[3][3]
    cdef double rep[3][3]
    cdef double proj[3]
    cdef double coeff, norm
    while start < 3:
        stop = start + 1
        while stop < 3 and w[stop] - w[start] <= tol:
            stop += 1
        size = stop - start
        if size > 1:
            for k in range(size):
                for i in range(3):
                    basis[k][i] = u[i][start + k]
            nrep = 0
            for axis in range(3):
                if nrep == size:
                    break
                for i in range(3):
                    proj[i] = 0.0
                for k in range(size):
                    coeff = basis[k][axis]
                    for i in range(3):
                        proj[i] += coeff * basis[k][i]
                for j in range(nrep):
                    coeff = 0.0
                    for i in range(3):
                        coeff += proj[i] * rep[j][i]
                    for i in range(3):
                        proj[i] -= coeff * rep[j][i]
                norm = sqrt(proj[0] * proj[0] + proj[1] * proj[1] + proj[2] * proj[2])
                if norm > 1e-6:
                    for i in range(3):
                        rep[nrep][i] = proj[i] / norm
                    nrep += 1
            for j in range(nrep):
                for i in range(3):
                    u[i][start + j] = rep[j][i]
        start = stop


cdef void _eig3(double a[3][3], double w[3], double u[3][3]) noexcept nogil:
    """Cyclic Jacobi with the same schedule and tolerances as linalg3."""
    cdef double v[3][3]
    cdef double scale, threshold, off
    cdef int it, i, k
    cdef int order[3]
    cdef int tmp
    for i in range(3):
        for k in range(3):
            v[i][k] = 1.0 if i == k else 0.0
    scale = 1.0
    for i in range(3):
        for k in range(3):
            if fabs(a[i][k]) > scale:
                scale = fabs(a[i][k])
    threshold = OFFDIAG_REL_TOL * scale
    for it in range(50):
        off = fabs(a[0][1])
        if fabs(a[0][2]) > off:
            off = fabs(a[0][2])
        if fabs(a[1][2]) > off:
            off = fabs(a[1][2])
        if off <= threshold:
            break
        _rotate(a, v, 0, 1)
        _rotate(a, v, 0, 2)
        _rotate(a, v, 1, 2)
    order[0] = 0
    order[1] = 1
    order[2] = 2
    # stable insertion sort of the three diagonal entries
    for i in range(1, 3):
        k = i
        while k > 0 and a[order[k]][order[k]] < a[order[k - 1]][order[k - 1]]:
            tmp = order[k]
            order[k] = order[k - 1]
            order[k - 1] = tmp
            k -= 1
    for k in range(3):
        w[k] = a[order[k]][order[k]]
        for i in range(3):
            u[i][k] = v[i][order[k]]
    _canonicalize_degenerate(w, u, scale)
    for k in range(3):
        _sign_convention(u, k)


def rates_grid(
    double[::1] eps,
    double[::1] delta1,
    double[::1] delta2,
    double[::1] delta_r,
    double[::1] temp,
    double[::1] s,
    double[::1] eta,
    double omega_c,
    double omega_cutoff,
    double omega_eval,
    double regime_factor,
):
    """Grid evaluator with the same contract as ``_purekern.rates_grid``."""
    cdef Py_ssize_t n = eps.shape[0]
    t1_arr = np.full(n, np.nan)
    tphi_arr = np.full(n, np.nan)
    t2_arr = np.full(n, np.nan)
    eq_arr = np.full(n, np.nan)
    deq_arr = np.full(n, np.nan)
    chi10sq_arr = np.full(n, np.nan)
    chidiff_arr = np.full(n, np.nan)
    status_arr = np.zeros(n, dtype=np.uint8)
    warn_arr = np.zeros(n, dtype=np.uint8)

    cdef double[::1] t1 = t1_arr
    cdef double[::1] tphi = tphi_arr
    cdef double[::1] t2 = t2_arr
    cdef double[::1] eqv = eq_arr
    cdef double[::1] deq = deq_arr
    cdef double[::1] chi10sq = chi10sq_arr
    cdef double[::1] chidiff = chidiff_arr
    cdef unsigned char[::1] status = status_arr
    cdef unsigned char[::1] warn = warn_arr

    cdef Py_ssize_t i
    cdef double a[3][3]
    cdef double w[3]
    cdef double u[3][3]
    cdef double chi00, chi11, chi10, dd, eq, omega_q, x2, j, s_eq, s_zero
    cdef double r1, rphi, rt2, tt1, ttphi, tt2, si, etai, ti
    cdef int bits

    with nogil:
        for i in range(n):
            si = s[i]
            etai = eta[i]
            ti = temp[i]
            if not (isfinite(eps[i]) and isfinite(delta1[i]) and isfinite(delta2[i])
                    and isfinite(delta_r[i]) and isfinite(ti) and isfinite(si)
                    and isfinite(etai)):
                status[i] = 3
                continue
            if delta1[i] < 0.0 or delta2[i] < 0.0 or delta_r[i] < 0.0 or ti <= 0.0 \
                    or si <= 0.0 or si > 4.0 or etai < 0.0:
                status[i] = 3
                continue

            a[0][0] = 0.5 * eps[i]
            a[0][1] = delta1[i]
            a[0][2] = delta2[i]
            a[1][0] = delta1[i]
            a[1][1] = -0.5 * eps[i]
            a[1][2] = 0.0
            a[2][0] = delta2[i]
            a[2][1] = 0.0
            a[2][2] = -0.5 * eps[i] + delta_r[i]
            _eig3(a, w, u)

            eq = w[1] - w[0]
            if eq <= DEGENERACY_TOL_UEV:
                status[i] = 1
                continue

            chi00 = u[0][0] * u[0][0] - u[1][0] * u[1][0] - u[2][0] * u[2][0]
            chi11 = u[0][1] * u[0][1] - u[1][1] * u[1][1] - u[2][1] * u[2][1]
            chi10 = u[0][0] * u[0][1] - u[1][0] * u[1][1] - u[2][0] * u[2][1]
            dd = chi11 - chi00

            # emission power spectrum at the qubit frequency
            omega_q = eq / HBAR
            x2 = HBAR / (KB * ti) * omega_q
            j = etai * pow(omega_q, si) / pow(omega_c, si - 1.0) * exp(-omega_q / omega_c)
            s_eq = j / -expm1(-x2)

            if si == 1.0:
                s_zero = etai * (KB * ti / HBAR)
            elif si > 1.0:
                s_zero = etai * omega_eval * (KB * ti / HBAR) / omega_c
            else:
                s_zero = etai * omega_cutoff * (KB * ti / HBAR) / omega_eval

            r1 = (PI / 2.0) * (chi10 * chi10) * s_eq
            rphi = (PI / 4.0) * (dd * dd) * s_zero
            tt1 = INFINITY if r1 == 0.0 else 1.0 / r1
            ttphi = INFINITY if rphi == 0.0 else 1.0 / rphi
            rt2 = 0.5 / tt1 + 1.0 / ttphi
            tt2 = INFINITY if rt2 == 0.0 else fmin(1.0 / rt2, 2.0 * tt1)

            t1[i] = tt1
            tphi[i] = ttphi
            t2[i] = tt2
            eqv[i] = eq
            deq[i] = 0.5 * dd
            chi10sq[i] = chi10 * chi10
            chidiff[i] = dd

            bits = 0
            if eq < regime_factor * etai * KB * ti:
                bits |= 1
            if eq < NEAR_DEGENERATE_WARN_UEV:
                bits |= 2
            warn[i] = <unsigned char> bits

    return (t1_arr, tphi_arr, t2_arr, eq_arr, deq_arr, chi10sq_arr,
            chidiff_arr, status_arr, warn_arr)


def corr_sums(omegas, weight_cos, weight_sin, double dt, Py_ssize_t n_t):
    """Mode sums on a uniform time grid, same contract as the fallback.

    Per mode the cosine/sine pair is advanced by a rotation recurrence, so
    the cost is a handful of flops per (mode, time) pair with no libm calls
    in the inner loop.
    """
    om = np.ascontiguousarray(omegas, dtype=np.float64)
    wc = np.ascontiguousarray(weight_cos, dtype=np.float64)
    ws = np.ascontiguousarray(weight_sin, dtype=np.float64)
    a_arr = np.zeros(n_t)
    b_arr = np.zeros(n_t)

    cdef double[::1] omv = om
    cdef double[::1] wcv = wc
    cdef double[::1] wsv = ws
    cdef double[::1] av = a_arr
    cdef double[::1] bv = b_arr
    cdef Py_ssize_t n_modes = omv.shape[0]
    cdef Py_ssize_t jm, k
    cdef double cd, sd, c, sn, cnew, wcj, wsj

    with nogil:
        for jm in range(n_modes):
            cd = cos(omv[jm] * dt)
            sd = sin(omv[jm] * dt)
            wcj = wcv[jm]
            wsj = wsv[jm]
            c = 1.0
            sn = 0.0
            for k in range(n_t):
                av[k] += wcj * c
                bv[k] += wsj * sn
                cnew = c * cd - sn * sd
                sn = sn * cd + c * sd
                c = cnew
    return a_arr, b_arr
