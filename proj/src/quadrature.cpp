#include "entgeo/quadrature.hpp"
#include "entgeo/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace entgeo {

namespace {

constexpr int kMaxTensorOrder = 256;
constexpr int kMaxPanels = 64;

// Neumaier compensated summation; fixed order keeps results deterministic.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Orthonormal Hermite function psi_k(t) = e^{-t^2/2} H_k(t) / sqrt(2^k k! sqrt(pi)).
// Stable for |t| up to ~26 (psi_0 stays normal); recurrence grows back to O(1).
double hermite_function(int k, double t) {
    const double pi_quarter = 0.7511255444649425; // pi^{-1/4}
    double prev = pi_quarter * std::exp(-0.5 * t * t);
    if (k == 0) return prev;
    double cur = std::sqrt(2.0) * t * prev;
    for (int j = 1; j < k; ++j) {
        double next = std::sqrt(2.0 / (j + 1)) * t * cur - std::sqrt(double(j) / (j + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::map<int, detail::HermiteRule> g_hermite_cache;
std::mutex g_hermite_mutex;

detail::HermiteRule build_hermite(int n) {
    // Golub-Welsch: nodes are eigenvalues of the Jacobi matrix with
    // off-diagonal sqrt(k/2). Weights are recovered from the orthonormal
    // Hermite function, which keeps relative accuracy in the far tail:
    //   w_i e^{t_i^2} = 1 / (n * psi_{n-1}(t_i)^2).
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        double b = std::sqrt(0.5 * k);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    detail::HermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = es.eigenvalues()(i);
        double psi = hermite_function(n - 1, t);
        rule.nodes[i] = t;
        rule.weights[i] = 1.0 / (double(n) * psi * psi);
    }
    return rule;
}

// Gauss-Legendre on [-1,1], same Golub-Welsch construction.
struct LegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

std::map<int, LegendreRule> g_legendre_cache;
std::mutex g_legendre_mutex;

const LegendreRule& legendre_rule(int n) {
    std::lock_guard<std::mutex> lock(g_legendre_mutex);
    auto it = g_legendre_cache.find(n);
    if (it != g_legendre_cache.end()) return it->second;
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        double b = double(k) / std::sqrt(4.0 * k * k - 1.0);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    LegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        rule.weights[i] = 2.0 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
    }
    return g_legendre_cache.emplace(n, std::move(rule)).first->second;
}

double tensor_hermite_pass(const Integrand& f,
                           const Eigen::VectorXd& center,
                           const Eigen::VectorXd& scales,
                           int order) {
    const int n = int(center.size());
    const auto& rule = detail::hermite_rule(order);
    const double sqrt2 = std::sqrt(2.0);

    double jacobian = 1.0;
    for (int k = 0; k < n; ++k) jacobian *= sqrt2 * scales(k);

    Eigen::VectorXd x(n);
    std::vector<int> idx(n, 0);
    CompensatedSum acc;
    while (true) {
        double w = 1.0;
        for (int k = 0; k < n; ++k) {
            x(k) = center(k) + sqrt2 * scales(k) * rule.nodes[idx[k]];
            w *= rule.weights[idx[k]];
        }
        double fv = f(x);
        if (!std::isfinite(fv)) {
            std::ostringstream os;
            os << "integrand not finite at node (";
            for (int k = 0; k < n; ++k) os << (k ? ", " : "") << x(k);
            os << ")";
            throw domain_error(os.str());
        }
        acc.add(w * fv);
        int k = 0;
        while (k < n && ++idx[k] == order) idx[k++] = 0;
        if (k == n) break;
    }
    return jacobian * acc.value();
}

double tensor_box_pass(const Integrand& f,
                       const Eigen::VectorXd& center,
                       const Eigen::VectorXd& scales,
                       double halfwidth,
                       int panels) {
    const int n = int(center.size());
    const int gl_order = 16;
    const auto& rule = legendre_rule(gl_order);

    // Per-axis composite nodes.
    std::vector<std::vector<double>> xs(n), ws(n);
    for (int k = 0; k < n; ++k) {
        double lo = center(k) - halfwidth * scales(k);
        double hi = center(k) + halfwidth * scales(k);
        double pw = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p) {
            double a = lo + p * pw;
            for (int i = 0; i < gl_order; ++i) {
                xs[k].push_back(a + 0.5 * pw * (rule.nodes[i] + 1.0));
                ws[k].push_back(0.5 * pw * rule.weights[i]);
            }
        }
    }

    const int per_axis = int(xs[0].size());
    Eigen::VectorXd x(n);
    std::vector<int> idx(n, 0);
    CompensatedSum acc;
    while (true) {
        double w = 1.0;
        for (int k = 0; k < n; ++k) {
            x(k) = xs[k][idx[k]];
            w *= ws[k][idx[k]];
        }
        double fv = f(x);
        if (!std::isfinite(fv)) {
            std::ostringstream os;
            os << "integrand not finite at node (";
            for (int k = 0; k < n; ++k) os << (k ? ", " : "") << x(k);
            os << ")";
            throw domain_error(os.str());
        }
        acc.add(w * fv);
        int k = 0;
        while (k < n && ++idx[k] == per_axis) idx[k++] = 0;
        if (k == n) break;
    }
    return acc.value();
}

} // namespace

namespace detail {
const HermiteRule& hermite_rule(int order) {
    std::lock_guard<std::mutex> lock(g_hermite_mutex);
    auto it = g_hermite_cache.find(order);
    if (it != g_hermite_cache.end()) return it->second;
    return g_hermite_cache.emplace(order, build_hermite(order)).first->second;
}
} // namespace detail

void QuadratureSpec::validate() const {
    if (scheme == QuadScheme::gauss_hermite_tensor && order < 8)
        throw domain_error("quadrature order must be >= 8 for the tensor scheme");
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw domain_error("quadrature tolerances must be positive");
    if (order > kMaxTensorOrder)
        throw domain_error("quadrature order exceeds supported maximum 256");
    if (box_halfwidth <= 0.0)
        throw domain_error("quadrature box halfwidth must be positive");
}

QuadratureSpec QuadratureSpec::pinned(int order) {
    QuadratureSpec s;
    s.order = order;
    s.max_refinements = 0;
    s.rel_tol = 1.0; // never enforced
    s.abs_tol = 1.0;
    return s;
}

QuadResult integrate(const Integrand& f,
                     const Eigen::VectorXd& weight_center,
                     const Eigen::VectorXd& weight_scales,
                     const QuadratureSpec& spec) {
    spec.validate();
    const int n = int(weight_center.size());
    if (n < 1 || n > 4)
        throw domain_error("integrate supports dimensions 1..4");
    if (weight_scales.size() != n)
        throw domain_error("weight_scales size mismatch");
    for (int k = 0; k < n; ++k)
        if (!(weight_scales(k) > 0.0))
            throw domain_error("weight scales must be positive");

    if (spec.scheme == QuadScheme::gauss_hermite_tensor) {
        int order = spec.order;
        double prev = tensor_hermite_pass(f, weight_center, weight_scales, std::max(8, order / 2));
        double cur = tensor_hermite_pass(f, weight_center, weight_scales, order);
        double err = std::abs(cur - prev);
        int refinements = 0;
        while (err > std::max(spec.abs_tol, spec.rel_tol * std::abs(cur)) &&
               spec.max_refinements > 0 &&
               refinements < spec.max_refinements && 2 * order <= kMaxTensorOrder) {
            prev = cur;
            order *= 2;
            ++refinements;
            cur = tensor_hermite_pass(f, weight_center, weight_scales, order);
            err = std::abs(cur - prev);
        }
        double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(cur));
        if (spec.max_refinements > 0 && err > tol) {
            std::ostringstream os;
            os << "Gauss-Hermite quadrature did not converge: error estimate " << err
               << " > tolerance " << tol << " at order " << order;
            throw convergence_error(os.str(), err, tol);
        }
        return {cur, err, order};
    }

    // adaptive_box
    int panels = 1;
    double prev = tensor_box_pass(f, weight_center, weight_scales, spec.box_halfwidth, panels);
    double cur = prev;
    double err = std::abs(prev);
    int refinements = 0;
    while (panels < kMaxPanels) {
        panels *= 2;
        ++refinements;
        cur = tensor_box_pass(f, weight_center, weight_scales, spec.box_halfwidth, panels);
        err = std::abs(cur - prev);
        if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(cur))) break;
        if (spec.max_refinements > 0 && refinements >= std::max(spec.max_refinements, 5)) break;
        prev = cur;
    }
    double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(cur));
    if (spec.max_refinements > 0 && err > tol) {
        std::ostringstream os;
        os << "adaptive box quadrature did not converge: error estimate " << err
           << " > tolerance " << tol << " with " << panels << " panels per axis";
        throw convergence_error(os.str(), err, tol);
    }
    return {cur, err, panels};
}

} // namespace entgeo
