#include "fouest/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fouest {

namespace {

// Kronrod-15 nodes on [-1,1] (symmetric; odd-index nodes are the Gauss-7 subset).
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

// Gauss-Legendre 15 on [-1,1]; used for the half-period oscillatory panels.
constexpr double kGl15Nodes[8] = {
    0.0,
    0.201194093997434522300628303394596,
    0.394151347077563369897207370981045,
    0.570972172608538847537226737253911,
    0.724417731360170047416186054613938,
    0.848206583410427216200648320774217,
    0.937273392400705904307758947710209,
    0.987992518020485428489565718586613};
constexpr double kGl15Weights[8] = {
    0.202578241925561272880620199967519,
    0.198431485327111576456118326443839,
    0.186161000015562211026800561866423,
    0.166269205816993933553200860481209,
    0.139570677926154314447804794511028,
    0.107159220467171935011869546685869,
    0.070366047488108124709267416450667,
    0.030753241996117268354628393577204};

struct Panel {
    double a, b, value, error;
};

// One (G7,K15) evaluation on [a,b]: Kronrod value + |K15-G7| error proxy.
Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f_mid = f(mid);
    double kronrod = kKronrodWeights[7] * f_mid;
    double gauss = kGaussWeights[3] * f_mid;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double s = f(mid - dx) + f(mid + dx);
        kronrod += kKronrodWeights[i] * s;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * s;
    }
    kronrod *= half;
    gauss *= half;
    // Standard QUADPACK-style rescaling of the raw difference.
    const double diff = std::abs(kronrod - gauss);
    const double err = diff * std::min(1.0, std::pow(200.0 * diff / std::max(std::abs(kronrod), 1e-300), 1.5)) +
                       1e-300;
    return {a, b, kronrod, std::max(err, diff * 1e-6)};
}

double gl15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = kGl15Weights[0] * f(mid);
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGl15Nodes[i];
        acc += kGl15Weights[i] * (f(mid - dx) + f(mid + dx));
    }
    return acc * half;
}

// Wynn epsilon table on the partial sums; returns the most-extrapolated stable
// entry and a correction-based error proxy.
QuadResult epsilon_extrapolate(const std::vector<double>& partial) {
    const std::size_t n = partial.size();
    std::vector<double> prev_col(n, 0.0);  // epsilon_{-1} = 0
    std::vector<double> cur_col = partial;
    double best = partial.back();
    double best_err = n >= 2 ? std::abs(partial[n - 1] - partial[n - 2]) : std::abs(partial[0]);
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<double> next_col(n - k);
        for (std::size_t j = 0; j + k < n; ++j) {
            const double denom = cur_col[j + 1] - cur_col[j];
            if (denom == 0.0 || !std::isfinite(1.0 / denom)) {
                next_col[j] = cur_col[j + 1];
            } else {
                next_col[j] = prev_col[j + 1] + 1.0 / denom;
            }
        }
        prev_col = std::move(cur_col);
        cur_col = std::move(next_col);
        // Even columns of the epsilon table are the sequence estimates.
        if (k % 2 == 0 && cur_col.size() >= 2) {
            const double cand = cur_col.back();
            const double err = std::abs(cur_col[cur_col.size() - 1] - cur_col[cur_col.size() - 2]);
            if (std::isfinite(cand) && err < best_err) {
                best = cand;
                best_err = err;
            }
        }
    }
    return {best, best_err};
}

}  // namespace

QuadResult adaptive_gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, int max_panels) {
    if (a == b) return {0.0, 0.0};
    std::vector<Panel> heap{gk15(f, a, b)};
    auto cmp = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    int panels = 1;
    while (panels < max_panels) {
        double total_err = 0.0;
        for (const Panel& p : heap) total_err += p.error;
        if (total_err <= abs_tol) break;

        std::pop_heap(heap.begin(), heap.end(), cmp);
        const Panel worst = heap.back();
        heap.pop_back();
        if (worst.b - worst.a < 1e-15 * (std::abs(worst.a) + std::abs(worst.b)) + 1e-300) {
            // Interval no longer splittable in double precision; keep as-is.
            Panel kept = worst;
            kept.error = 0.0;
            heap.push_back(kept);
            std::push_heap(heap.begin(), heap.end(), cmp);
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        heap.push_back(gk15(f, worst.a, mid));
        std::push_heap(heap.begin(), heap.end(), cmp);
        heap.push_back(gk15(f, mid, worst.b));
        std::push_heap(heap.begin(), heap.end(), cmp);
        ++panels;
    }

    double value = 0.0;
    double error = 0.0;
    for (const Panel& p : heap) {
        value += p.value;
        error += p.error;
    }
    if (error > abs_tol)
        throw ToleranceError("adaptive_gauss_kronrod: panel budget exhausted before reaching tolerance",
                             error);
    return {value, error};
}

QuadResult power_endpoint_integral(double alpha, const std::function<double(double)>& g, double a,
                                   double abs_tol) {
    if (alpha <= -1.0) throw std::invalid_argument("power_endpoint_integral: alpha must be > -1");
    if (a <= 0.0) return {0.0, 0.0};
    const double p = 1.0 + alpha;
    const double upper = std::pow(a, p) / p;
    const double inv_p = 1.0 / p;
    auto transformed = [&](double u) {
        const double x = std::pow(p * u, inv_p);
        return g(x);
    };
    return adaptive_gauss_kronrod(transformed, 0.0, upper, abs_tol);
}

QuadResult oscillatory_cosine_tail(const std::function<double(double)>& w, double c, double t,
                                   double abs_tol) {
    if (!(t > 0.0)) throw std::invalid_argument("oscillatory_cosine_tail: t must be > 0");
    // Work in y = t x so panels have unit-independent length pi.
    auto integrand = [&](double y) { return w(y / t) * std::cos(y); };
    const double b = c * t;
    const double pi = 3.141592653589793238462643383279503;

    // First cosine zero at or after b.
    const double m0 = std::ceil(b / pi - 0.5);
    const double y0 = (m0 + 0.5) * pi;
    double partial_value = 0.0;
    if (y0 > b) partial_value = adaptive_gauss_kronrod(integrand, b, y0, 0.1 * abs_tol * t).value;

    constexpr int kMaxTerms = 64;
    std::vector<double> sums;
    sums.reserve(kMaxTerms);
    double acc = 0.0;
    double last_term = 0.0;
    QuadResult accel{0.0, std::abs(partial_value) + 1.0};
    for (int k = 0; k < kMaxTerms; ++k) {
        const double a_k = y0 + k * pi;
        last_term = gl15(integrand, a_k, a_k + pi);
        acc += last_term;
        sums.push_back(acc);
        if (sums.size() >= 6 && k % 2 == 1) {
            accel = epsilon_extrapolate(sums);
            // Alternating series: the magnitude of the next term also bounds the
            // remainder of the raw sum; take the smaller of the two estimates.
            const double alt_bound = std::abs(last_term);
            if (std::min(accel.error, alt_bound) <= 0.5 * abs_tol * t) break;
        }
    }
    if (std::min(accel.error, std::abs(last_term)) > 0.5 * abs_tol * t)
        throw ToleranceError("oscillatory_cosine_tail: series acceleration did not reach tolerance",
                             (accel.error + std::abs(partial_value) * 0.0) / t);

    const double value = (partial_value + accel.value) / t;
    const double error = (0.1 * abs_tol * t + accel.error) / t;
    return {value, error};
}

}  // namespace fouest
