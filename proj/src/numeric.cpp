#include "wres/numeric.hpp"

#include <cmath>

namespace wres {

uint64_t Rng::next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() { return double(next() >> 11) * 0x1.0p-53; }

int Rng::uniform_int(int lo, int hi) {
    return lo + int(next() % uint64_t(hi - lo + 1));
}

Rational Rng::rational(int max_num, int max_den) {
    return Rational(uniform_int(-max_num, max_num), uniform_int(1, max_den));
}

GaussianRational Rng::gaussian(int max_num, int max_den) {
    return {rational(max_num, max_den), rational(max_num, max_den)};
}

ParamAssignment random_assignment(Rng& rng) {
    ParamAssignment a;
    auto put = [&](ParamId p) { a[p.code()] = GaussianRational(rng.rational(18, 9)); };
    put(ParamId::hprime());
    for (int j = 1; j <= 4; ++j) {
        put(ParamId::v(j));
        put(ParamId::w(j));
        put(ParamId::dv(j));
        put(ParamId::dw(j));
        for (int k = 1; k <= 4; ++k) put(ParamId::h(j, k));
    }
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) put(ParamId::g(i, j));
    // xi_1..xi_3 stay unassigned: every numeric path works on per-monomial
    // kernels whose xi part has already been split off
    return a;
}

namespace {

std::complex<double> simpson_rec(const std::function<std::complex<double>(double)>& g, double a,
                                 double b, std::complex<double> fa, std::complex<double> fb,
                                 std::complex<double> fm, std::complex<double> whole, double tol,
                                 int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    std::complex<double> flm = g(lm), frm = g(rm);
    std::complex<double> left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    std::complex<double> right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    std::complex<double> delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(g, a, m, fa, fm, flm, left, tol * 0.5, depth - 1) +
           simpson_rec(g, m, b, fm, fb, frm, right, tol * 0.5, depth - 1);
}

std::complex<double> adaptive_simpson(const std::function<std::complex<double>(double)>& g,
                                      double a, double b, double tol) {
    double m = 0.5 * (a + b);
    std::complex<double> fa = g(a), fb = g(b), fm = g(m);
    std::complex<double> whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(g, a, b, fa, fb, fm, whole, tol, 48);
}

/// Asymptotic coefficients of f = N/D at infinity: f ~ sum_{k>=1} a_k xi^-k.
/// Returns a_k for k = 1..K via series division of the reversed polynomials.
std::vector<std::complex<double>> asymptotic_coeffs(const XiRational& f,
                                                    const ParamAssignment& a, int K) {
    const std::complex<double> I(0.0, 1.0);
    std::vector<std::complex<double>> N;
    for (auto& c : f.num()) N.push_back(c.eval_complex(a));
    std::vector<std::complex<double>> D = {1.0};
    auto mul_lin = [&](std::complex<double> root) {
        std::vector<std::complex<double>> out(D.size() + 1, 0.0);
        for (size_t k = 0; k < D.size(); ++k) {
            out[k] += D[k] * (-root);
            out[k + 1] += D[k];
        }
        D = std::move(out);
    };
    for (int k = 0; k < f.pole_plus(); ++k) mul_lin(I);
    for (int k = 0; k < f.pole_minus(); ++k) mul_lin(-I);
    int n = int(N.size()) - 1, d = int(D.size()) - 1;
    if (n < 0) return std::vector<std::complex<double>>(K, 0.0);
    // t = 1/xi: f = t^{d-n} * Nrev(t)/Drev(t); b_m from series division
    std::vector<std::complex<double>> Nrev(N.rbegin(), N.rend()), Drev(D.rbegin(), D.rend());
    std::vector<std::complex<double>> b(K + 1, 0.0);
    for (int m = 0; m <= K; ++m) {
        std::complex<double> acc = m < int(Nrev.size()) ? Nrev[m] : 0.0;
        for (int s = 1; s <= m && s < int(Drev.size()); ++s) acc -= Drev[s] * b[m - s];
        b[m] = acc / Drev[0];
    }
    std::vector<std::complex<double>> out(K, 0.0);
    for (int k = 1; k <= K; ++k) {
        int m = k - (d - n);
        if (m >= 0 && m <= K) out[k - 1] = b[m];
    }
    return out;
}

}  // namespace

std::complex<double> quad_line(const XiRational& f, const ParamAssignment& a, double R,
                               double tol) {
    auto g = [&](double theta) {
        double x = std::tan(theta);
        double sec2 = 1.0 + x * x;
        return f.eval_complex(a, x) * sec2;
    };
    double thetaR = std::atan(R);
    std::complex<double> core = adaptive_simpson(g, -thetaR, thetaR, tol);
    // analytic tails beyond +-R: odd k cancels, even k gives 2 R^{1-k}/(k-1)
    std::complex<double> tail = 0.0;
    auto ak = asymptotic_coeffs(f, a, 9);
    for (int k = 2; k <= 9; k += 2) tail += ak[k - 1] * 2.0 * std::pow(R, 1.0 - k) / (k - 1.0);
    return core + tail;
}

QuadCheck check_line_integral(const XiRational& f, const ParamAssignment& a, double R,
                              double tol) {
    FormalPoly sym = f.integrate_line();
    std::complex<double> s = sym.eval_complex(a);
    std::complex<double> n = quad_line(f, a, R, tol);
    // floor keeps identically-zero integrals from reading as 100% error
    // against quadrature noise
    double scale = std::max({std::abs(s), std::abs(n), 1e-6});
    return {s, n, std::abs(s - n) / scale};
}

MomentEstimate sphere_moment_mc(const MomentIndex& m, int samples, uint64_t seed) {
    Rng rng(seed);
    double sum = 0.0, sumsq = 0.0;
    for (int it = 0; it < samples; ++it) {
        double z = 2.0 * rng.uniform() - 1.0;
        double phi = 2.0 * M_PI * rng.uniform();
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double x = r * std::cos(phi), y = r * std::sin(phi);
        double val = std::pow(x, m.a1) * std::pow(y, m.a2) * std::pow(z, m.a3);
        sum += val;
        sumsq += val * val;
    }
    double mean = sum / samples;
    double var = std::max(0.0, sumsq / samples - mean * mean);
    double area = 4.0 * M_PI;
    return {area * mean, area * std::sqrt(var / samples)};
}

XiRational random_decaying_xi_rational(Rng& rng, int max_order) {
    int ap = rng.uniform_int(1, max_order);
    int am = rng.uniform_int(0, max_order);
    int maxdeg = ap + am - 2;
    if (maxdeg < 0) return random_decaying_xi_rational(rng, max_order);
    std::vector<FormalPoly> num(maxdeg + 1);
    for (auto& c : num)
        if (rng.uniform() < 0.8) c = FormalPoly::constant(rng.gaussian(8, 5));
    XiRational f = XiRational::with_poles(std::move(num), ap, am);
    return f.is_zero() ? random_decaying_xi_rational(rng, max_order) : f;
}

XiRational random_xi_rational(Rng& rng, int max_order, int max_extra_deg) {
    int ap = rng.uniform_int(0, max_order);
    int am = rng.uniform_int(0, max_order);
    int deg = rng.uniform_int(0, ap + am + max_extra_deg);
    std::vector<FormalPoly> num(deg + 1);
    for (auto& c : num)
        if (rng.uniform() < 0.75) c = FormalPoly::constant(rng.gaussian(8, 5));
    return XiRational::with_poles(std::move(num), ap, am);
}

}  // namespace wres
