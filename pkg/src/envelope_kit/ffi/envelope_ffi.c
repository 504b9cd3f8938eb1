/*
 * C-calling-convention surface for rolling-disc envelope extraction.
 *
 * Self-contained reimplementation of the library pipeline so the shared
 * object has no runtime dependencies. Every arithmetic step mirrors the
 * in-process implementation (same formulas, same operation order, same
 * tie-breaks), which keeps the returned indices identical.
 *
 * Exports (unmangled, thread-safe, no global state):
 *   env_frontiers  - upper and lower frontier indices
 *   env_envelope   - merged-|s| envelope indices
 *   env_version    - NUL-terminated semantic version
 *
 * Status codes: 0 ok, 1 null argument, 2 empty input, 3 silent signal,
 * 4 no pulses on one requested side, 5 internal failure.
 *
 * Build: cc -O2 -shared -fPIC -o libenvelope.so envelope_ffi.c -lm
 */

#include <math.h>
#include <stdint.h>
#include <stdlib.h>
#include <string.h>

#define ENV_VERSION "0.1.0"

#define ENV_OK 0
#define ENV_NULL_ARG 1
#define ENV_EMPTY 2
#define ENV_SILENT 3
#define ENV_ONE_SIDED 4
#define ENV_INTERNAL 5

#define DEFAULT_TOL 1e-9

#ifdef _WIN32
#define ENV_EXPORT __declspec(dllexport)
#else
#define ENV_EXPORT __attribute__((visibility("default")))
#endif

/* Median of v[0..k); sorts in place. Even counts average the middle two. */
static int cmp_double(const void *pa, const void *pb)
{
    double a = *(const double *)pa, b = *(const double *)pb;
    return (a > b) - (a < b);
}

static double median_inplace(double *v, size_t k)
{
    qsort(v, k, sizeof(double), cmp_double);
    if (k % 2 == 1)
        return v[k / 2];
    return 0.5 * (v[k / 2 - 1] + v[k / 2]);
}

/* Disc radius from the discrete curvature of consecutive triples. */
static double estimate_alpha(const double *x, const double *y, size_t m,
                             double tol, int *err)
{
    double x_span = (m >= 2) ? x[m - 1] - x[0] : 0.0;
    double hi = (x_span > 1.0) ? x_span : 1.0;
    double *radii;
    size_t k = 0, i;
    double alpha;

    *err = 0;
    if (m < 3)
        return hi;
    radii = (double *)malloc((m - 2) * sizeof(double));
    if (!radii) {
        *err = 1;
        return 0.0;
    }
    for (i = 0; i + 2 < m; i++) {
        double ax = x[i + 1] - x[i], ay = y[i + 1] - y[i];
        double bx = x[i + 2] - x[i + 1], by = y[i + 2] - y[i + 1];
        double cx = x[i + 2] - x[i], cy = y[i + 2] - y[i];
        double a = sqrt(ax * ax + ay * ay);
        double b = sqrt(bx * bx + by * by);
        double c = sqrt(cx * cx + cy * cy);
        double cross = fabs(ax * cy - ay * cx);
        double abc = a * b * c;
        if (cross > tol * abc)
            radii[k++] = abc / (2.0 * cross);
    }
    if (k == 0) {
        free(radii);
        return hi;
    }
    alpha = median_inplace(radii, k);
    free(radii);
    if (alpha < 1.0)
        alpha = 1.0;
    if (alpha > hi)
        alpha = hi;
    return alpha;
}

/*
 * Roll the disc from ordinal 0 to the last point. ords must hold m
 * slots. From the current point, candidates are tried in x order; the
 * first reachable chord (|pq| <= 2*alpha) whose upper-centered
 * radius-alpha disc contains no candidate ahead of the current point
 * in its open interior wins. Exactly tangent neighbors sit on the
 * boundary and never block. With no acceptable chord the chain
 * bridges to the next candidate.
 */
static void pivot_chain(const double *x, const double *y, size_t m,
                        double alpha, size_t *ords, size_t *count)
{
    double reach = 2.0 * alpha;
    double reach2 = reach * reach;
    double block = alpha;
    double block2 = block * block;
    size_t i = 0, nout = 0;

    ords[nout++] = 0;
    while (i + 1 < m) {
        double px = x[i], py = y[i];
        double lim = px + reach;
        size_t nxt = i + 1; /* bridge landing unless a chord is accepted */
        size_t j;

        for (j = i + 1; j < m && x[j] <= lim; j++) {
            double dx = x[j] - px, dy = y[j] - py;
            double d2 = dx * dx + dy * dy;
            double d, h2, h, cx, cy;
            double wlo, whi;
            int blocked = 0;
            size_t k;

            if (d2 > reach2)
                continue;
            d = sqrt(d2);
            h2 = alpha * alpha - 0.25 * d2;
            h = (h2 > 0.0) ? sqrt(h2) : 0.0;
            cx = px + 0.5 * dx - h * dy / d;
            cy = py + 0.5 * dy + h * dx / d;
            /* a point inside the open disc satisfies |x - cx| < alpha */
            wlo = cx - block;
            whi = cx + block;
            for (k = i + 1; k < m && x[k] <= whi; k++) {
                double kx, ky;
                if (k == j || x[k] < wlo)
                    continue;
                kx = x[k] - cx;
                ky = y[k] - cy;
                if (kx * kx + ky * ky < block2) {
                    blocked = 1;
                    break;
                }
            }
            if (!blocked) {
                nxt = j;
                break;
            }
        }
        i = nxt;
        ords[nout++] = i;
    }
    *count = nout;
}

/*
 * Full pipeline over s: pulses -> candidates -> scaling -> alpha ->
 * chain. merged != 0 takes |extremum| of every pulse; otherwise only
 * positive pulses contribute (callers negate s for the lower side).
 * Returns a status code; ENV_ONE_SIDED means no positive pulse existed.
 */
static int upper_pipeline(const double *s, size_t n, double alpha_in,
                          int merged, uint64_t *out, uint64_t *out_len)
{
    double y_max = 0.0;
    size_t i, m = 0;
    size_t *idx = NULL, *ords = NULL;
    double *val = NULL, *x = NULL, *y = NULL;
    double x_step, alpha;
    size_t count = 0;
    int status = ENV_INTERNAL;

    *out_len = 0;
    for (i = 0; i < n; i++) {
        double a = fabs(s[i]);
        if (a > y_max)
            y_max = a;
    }
    if (y_max == 0.0)
        return ENV_SILENT;

    idx = (size_t *)malloc(n * sizeof(size_t));
    val = (double *)malloc(n * sizeof(double));
    if (!idx || !val)
        goto done;

    i = 0;
    while (i < n) {
        double v = s[i];
        int sg = (v > 0.0) - (v < 0.0);
        size_t best;
        if (sg == 0) {
            i++;
            continue;
        }
        best = i;
        while (i < n && ((s[i] > 0.0) - (s[i] < 0.0)) == sg) {
            if (merged) {
                if (fabs(s[i]) > fabs(s[best]))
                    best = i;
            } else if (sg > 0) {
                if (s[i] > s[best])
                    best = i;
            }
            i++;
        }
        if (merged || sg > 0) {
            idx[m] = best;
            val[m] = merged ? fabs(s[best]) : s[best];
            m++;
        }
    }
    if (m == 0) {
        status = ENV_ONE_SIDED;
        goto done;
    }

    x = (double *)malloc(m * sizeof(double));
    y = (double *)malloc(m * sizeof(double));
    ords = (size_t *)malloc(m * sizeof(size_t));
    if (!x || !y || !ords)
        goto done;
    x_step = (m >= 2) ? (double)(idx[m - 1] - idx[0]) / (double)(m - 1) : 1.0;
    for (i = 0; i < m; i++) {
        x[i] = (double)idx[i] / x_step;
        y[i] = val[i] / y_max;
    }

    if (alpha_in > 0.0) {
        alpha = alpha_in;
    } else {
        int err = 0;
        alpha = estimate_alpha(x, y, m, DEFAULT_TOL, &err);
        if (err)
            goto done;
    }

    pivot_chain(x, y, m, alpha, ords, &count);
    for (i = 0; i < count; i++)
        out[i] = (uint64_t)idx[ords[i]];
    *out_len = (uint64_t)count;
    status = ENV_OK;

done:
    free(idx);
    free(val);
    free(x);
    free(y);
    free(ords);
    return status;
}

ENV_EXPORT int32_t env_frontiers(const double *signal, uint64_t n, double alpha,
                                 uint64_t *upper_out, uint64_t *upper_len,
                                 uint64_t *lower_out, uint64_t *lower_len)
{
    double *neg;
    uint64_t i;
    int st_u, st_l;

    if (!signal || !upper_out || !upper_len || !lower_out || !lower_len)
        return ENV_NULL_ARG;
    *upper_len = 0;
    *lower_len = 0;
    if (n == 0)
        return ENV_EMPTY;

    st_u = upper_pipeline(signal, (size_t)n, alpha, 0, upper_out, upper_len);
    if (st_u != ENV_OK && st_u != ENV_ONE_SIDED)
        return st_u;

    neg = (double *)malloc((size_t)n * sizeof(double));
    if (!neg)
        return ENV_INTERNAL;
    for (i = 0; i < n; i++)
        neg[i] = -signal[i];
    st_l = upper_pipeline(neg, (size_t)n, alpha, 0, lower_out, lower_len);
    free(neg);
    if (st_l != ENV_OK && st_l != ENV_ONE_SIDED)
        return st_l;

    if (st_u == ENV_ONE_SIDED || st_l == ENV_ONE_SIDED)
        return ENV_ONE_SIDED;
    return ENV_OK;
}

ENV_EXPORT int32_t env_envelope(const double *signal, uint64_t n, double alpha,
                                uint64_t *out, uint64_t *out_len)
{
    if (!signal || !out || !out_len)
        return ENV_NULL_ARG;
    *out_len = 0;
    if (n == 0)
        return ENV_EMPTY;
    return upper_pipeline(signal, (size_t)n, alpha, 1, out, out_len);
}

ENV_EXPORT int32_t env_version(char *out, uint64_t capacity)
{
    if (!out)
        return ENV_NULL_ARG;
    if (capacity < sizeof(ENV_VERSION))
        return ENV_EMPTY;
    memcpy(out, ENV_VERSION, sizeof(ENV_VERSION));
    return ENV_OK;
}
