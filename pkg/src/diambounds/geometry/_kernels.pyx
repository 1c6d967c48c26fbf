# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels.

Same contract as ``_pykernels`` but on int64 inputs with 128-bit
intermediates. Any overflow raises OverflowError so the caller can rerun the
call on the pure-Python path.
"""

from libc.stdint cimport int64_t, uint32_t

BACKEND = "cython"

cdef extern from *:
    """
    #include <stdint.h>
    #include <string.h>
    typedef __int128 i128;
    #define KMAX 8
    #define MMAX 64

    static int mul_ok(i128 a, i128 b, i128 *out) { return !__builtin_mul_overflow(a, b, out); }
    static int sub_ok(i128 a, i128 b, i128 *out) { return !__builtin_sub_overflow(a, b, out); }
    static int add_ok(i128 a, i128 b, i128 *out) { return !__builtin_add_overflow(a, b, out); }

    /* Bareiss determinant of the k x k row-major matrix M; 0 on success. */
    static int dk_det(const i128 *M, int k, i128 *out) {
        i128 m[KMAX * KMAX];
        i128 prev = 1, t1, t2, tmp;
        int sign = 1, c, r, j;
        if (k == 0) { *out = 1; return 0; }
        memcpy(m, M, sizeof(i128) * k * k);
        for (c = 0; c < k - 1; c++) {
            if (m[c * k + c] == 0) {
                for (r = c + 1; r < k; r++) if (m[r * k + c] != 0) break;
                if (r == k) { *out = 0; return 0; }
                for (j = 0; j < k; j++) { tmp = m[c * k + j]; m[c * k + j] = m[r * k + j]; m[r * k + j] = tmp; }
                sign = -sign;
            }
            for (r = c + 1; r < k; r++) {
                for (j = c + 1; j < k; j++) {
                    if (!mul_ok(m[c * k + c], m[r * k + j], &t1)) return 1;
                    if (!mul_ok(m[r * k + c], m[c * k + j], &t2)) return 1;
                    if (!sub_ok(t1, t2, &t1)) return 1;
                    m[r * k + j] = t1 / prev;
                }
            }
            prev = m[c * k + c];
        }
        *out = sign * m[(k - 1) * k + (k - 1)];
        return 0;
    }

    /* Rank of an nr x nc row-major matrix by fraction-free elimination. */
    static int dk_rank(const int64_t *A, int nr, int nc, int *out) {
        i128 m[MMAX * KMAX];
        i128 prev = 1, t1, t2, tmp;
        int r = 0, c, i, j, piv;
        for (i = 0; i < nr * nc; i++) m[i] = A[i];
        for (c = 0; c < nc && r < nr; c++) {
            for (piv = r; piv < nr; piv++) if (m[piv * nc + c] != 0) break;
            if (piv == nr) continue;
            if (piv != r)
                for (j = 0; j < nc; j++) { tmp = m[r * nc + j]; m[r * nc + j] = m[piv * nc + j]; m[piv * nc + j] = tmp; }
            for (i = r + 1; i < nr; i++) {
                for (j = c + 1; j < nc; j++) {
                    if (!mul_ok(m[r * nc + c], m[i * nc + j], &t1)) return 1;
                    if (!mul_ok(m[i * nc + c], m[r * nc + j], &t2)) return 1;
                    if (!sub_ok(t1, t2, &t1)) return 1;
                    m[i * nc + j] = t1 / prev;
                }
                m[i * nc + c] = 0;
            }
            prev = m[r * nc + c];
            r++;
        }
        *out = r;
        return 0;
    }

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) { i128 t = a % b; a = b; b = t; }
        return a;
    }

    /* Advance idx (k indices out of m) to the next combination; 0 when done. */
    static int next_comb(int *idx, int k, int m) {
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) i--;
        if (i < 0) return 0;
        idx[i]++;
        for (int j = i + 1; j < k; j++) idx[j] = idx[j - 1] + 1;
        return 1;
    }

    /* Solve the basis idx; status 0 ok, 1 overflow, 2 singular, 3 infeasible. */
    static int dk_basis(const int64_t *A, const int64_t *b, int m, int d, const int *idx,
                        int64_t *nums, int64_t *den_out, uint32_t *mask_out) {
        i128 S[KMAX * KMAX], T[KMAX * KMAX], den, x[KMAX], g, lhs, rhs, t;
        int i, j, r;
        uint32_t mask = 0;
        for (r = 0; r < d; r++) for (j = 0; j < d; j++) S[r * d + j] = A[idx[r] * d + j];
        if (dk_det(S, d, &den)) return 1;
        if (den == 0) return 2;
        for (j = 0; j < d; j++) {
            memcpy(T, S, sizeof(i128) * d * d);
            for (r = 0; r < d; r++) T[r * d + j] = b[idx[r]];
            if (dk_det(T, d, &x[j])) return 1;
        }
        if (den < 0) { den = -den; for (j = 0; j < d; j++) x[j] = -x[j]; }
        g = den;
        for (j = 0; j < d; j++) g = gcd128(g, x[j]);
        den /= g;
        for (j = 0; j < d; j++) x[j] /= g;
        for (i = 0; i < m; i++) {
            lhs = 0;
            for (j = 0; j < d; j++) {
                if (!mul_ok(A[i * d + j], x[j], &t)) return 1;
                if (!add_ok(lhs, t, &lhs)) return 1;
            }
            if (!mul_ok(b[i], den, &rhs)) return 1;
            if (lhs > rhs) return 3;
            if (lhs == rhs) mask |= (uint32_t)1 << i;
        }
        if (den > INT64_MAX) return 1;
        for (j = 0; j < d; j++) {
            if (x[j] > INT64_MAX || x[j] < INT64_MIN) return 1;
            nums[j] = (int64_t)x[j];
        }
        *den_out = (int64_t)den;
        *mask_out = mask;
        return 0;
    }

    /* Kernel direction of the (d-1)-row basis idx; status 0 ok, 1 overflow. */
    static int dk_cross(const int64_t *A, int d, const int *idx, i128 *ray) {
        i128 S[KMAX * KMAX];
        int j, r, c, cc;
        for (j = 0; j < d; j++) {
            for (r = 0; r < d - 1; r++)
                for (c = 0, cc = 0; c < d; c++) if (c != j) S[r * (d - 1) + cc++] = A[idx[r] * d + c];
            if (dk_det(S, d - 1, &ray[j])) return 1;
            if (j & 1) ray[j] = -ray[j];
        }
        return 0;
    }

    /* 1 if a ray is found, 0 if none, -1 on overflow. */
    static int dk_has_ray(const int64_t *A, int m, int d) {
        int idx[KMAX], j, i, k = d - 1, nonzero, pos, neg;
        i128 ray[KMAX], t, dot;
        for (j = 0; j < k; j++) idx[j] = j;
        do {
            if (dk_cross(A, d, idx, ray)) return -1;
            nonzero = 0;
            for (j = 0; j < d; j++) if (ray[j] != 0) nonzero = 1;
            if (!nonzero) continue;
            pos = neg = 0;
            for (i = 0; i < m; i++) {
                dot = 0;
                for (j = 0; j < d; j++) {
                    if (!mul_ok(A[i * d + j], ray[j], &t)) return -1;
                    if (!add_ok(dot, t, &dot)) return -1;
                }
                if (dot > 0) pos = 1;
                if (dot < 0) neg = 1;
                if (pos && neg) break;
            }
            if (!(pos && neg)) return 1;
        } while (k > 0 && next_comb(idx, k, m));
        return 0;
    }
    """
    int KMAX
    int MMAX
    int dk_rank(const int64_t *A, int nr, int nc, int *out) nogil
    int next_comb(int *idx, int k, int m) nogil
    int dk_basis(const int64_t *A, const int64_t *b, int m, int d, const int *idx,
                 int64_t *nums, int64_t *den_out, uint32_t *mask_out) nogil
    int dk_has_ray(const int64_t *A, int m, int d) nogil

from libc.stdlib cimport malloc, free


cdef int64_t *_pack(list A, int d) except NULL:
    cdef int m = len(A)
    cdef int64_t *buf = <int64_t *> malloc(sizeof(int64_t) * max(m * d, 1))
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            for j in range(d):
                buf[i * d + j] = A[i][j]
    except OverflowError:
        free(buf)
        raise
    return buf


def _check_shape(int m, int d):
    if d < 1 or d > KMAX or m > 32 or m > MMAX:
        raise OverflowError("shape outside compiled kernel limits")


def rank(list rows):
    if not rows:
        return 0
    cdef int nr = len(rows), nc = len(rows[0]), out = 0, status
    _check_shape(nr, nc)
    cdef int64_t *buf = _pack(rows, nc)
    status = dk_rank(buf, nr, nc, &out)
    free(buf)
    if status:
        raise OverflowError("rank overflowed 128-bit arithmetic")
    return out


def mask_rank(list A, unsigned long mask):
    return rank([row for i, row in enumerate(A) if mask >> i & 1])


def solve_vertices(list A, list b, int d):
    cdef int m = len(A), status, j
    cdef int idx[8]
    cdef int64_t nums[8]
    cdef int64_t den = 0
    cdef uint32_t mask = 0
    cdef int64_t *Ab
    cdef int64_t *bb
    _check_shape(m, d)
    if m < d:
        return []
    Ab = _pack(A, d)
    try:
        bb = _pack([[x] for x in b], 1)
    except BaseException:
        free(Ab)
        raise
    found = {}
    try:
        for j in range(d):
            idx[j] = j
        while True:
            status = dk_basis(Ab, bb, m, d, idx, nums, &den, &mask)
            if status == 1:
                raise OverflowError("vertex solve overflowed 128-bit arithmetic")
            if status == 0:
                key = (tuple([nums[j] for j in range(d)]), den)
                if key not in found:
                    found[key] = mask
            if not next_comb(idx, d, m):
                break
    finally:
        free(Ab)
        free(bb)
    return [(nums_, den_, mask_) for (nums_, den_), mask_ in found.items()]


def has_recession_ray(list A, int d):
    cdef int m = len(A), status
    _check_shape(m, d)
    if rank(A) < d:
        return True
    cdef int64_t *Ab = _pack(A, d)
    status = dk_has_ray(Ab, m, d)
    free(Ab)
    if status < 0:
        raise OverflowError("ray search overflowed 128-bit arithmetic")
    return status == 1


def adjacent_pairs(list A, list masks, int d):
    cdef Py_ssize_t i, j, nv = len(masks)
    cdef unsigned long common
    cdef int m = len(A), nr, r, c, out, status
    cdef int64_t *Ab
    cdef int64_t sub[32 * 8]
    _check_shape(m, d)
    Ab = _pack(A, d)
    cache = {}
    pairs = []
    try:
        for i in range(nv):
            for j in range(i + 1, nv):
                common = <unsigned long> masks[i] & <unsigned long> masks[j]
                if bin(common).count("1") < d - 1:
                    continue
                hit = cache.get(common)
                if hit is None:
                    nr = 0
                    for r in range(m):
                        if common >> r & 1:
                            for c in range(d):
                                sub[nr * d + c] = Ab[r * d + c]
                            nr += 1
                    status = dk_rank(sub, nr, d, &out)
                    if status:
                        raise OverflowError("adjacency rank overflowed 128-bit arithmetic")
                    cache[common] = hit = out
                if hit == d - 1:
                    pairs.append((i, j))
    finally:
        free(Ab)
    return pairs


def graph_diameter(int n_nodes, list edges):
    cdef int s, u, v, k, head, tail, seen, best = 0
    if n_nodes == 0:
        return -1
    cdef int *deg = <int *> malloc(sizeof(int) * (n_nodes + 1))
    cdef int *nbr = <int *> malloc(sizeof(int) * max(2 * len(edges), 1))
    cdef int *dist = <int *> malloc(sizeof(int) * n_nodes)
    cdef int *queue = <int *> malloc(sizeof(int) * n_nodes)
    cdef int *fill = <int *> malloc(sizeof(int) * n_nodes)
    if not (deg and nbr and dist and queue and fill):
        free(deg); free(nbr); free(dist); free(queue); free(fill)
        raise MemoryError()
    try:
        # CSR adjacency
        for u in range(n_nodes + 1):
            deg[u] = 0
        for e in edges:
            deg[<int> e[0] + 1] += 1
            deg[<int> e[1] + 1] += 1
        for u in range(n_nodes):
            deg[u + 1] += deg[u]
            fill[u] = deg[u]
        for e in edges:
            u, v = e[0], e[1]
            nbr[fill[u]] = v
            fill[u] += 1
            nbr[fill[v]] = u
            fill[v] += 1
        for s in range(n_nodes):
            for u in range(n_nodes):
                dist[u] = -1
            dist[s] = 0
            queue[0] = s
            head, tail, seen = 0, 1, 1
            while head < tail:
                u = queue[head]
                head += 1
                for k in range(deg[u], deg[u + 1]):
                    v = nbr[k]
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        queue[tail] = v
                        tail += 1
                        seen += 1
            if seen < n_nodes:
                return -1
            if dist[queue[tail - 1]] > best:
                best = dist[queue[tail - 1]]
        return best
    finally:
        free(deg); free(nbr); free(dist); free(queue); free(fill)
