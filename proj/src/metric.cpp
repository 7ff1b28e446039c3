#include "entgeo/metric.hpp"
#include "entgeo/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace entgeo {

namespace {

std::vector<double> to_vec(const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

} // namespace

MetricTensor MetricTensor::flagged(Eigen::VectorXd theta, Eigen::MatrixXd g) {
    if (g.rows() != g.cols())
        throw domain_error("metric matrix must be square");
    double scale = g.cwiseAbs().maxCoeff();
    double asym = (g - g.transpose().eval()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(1.0, scale)) {
        std::ostringstream os;
        os << "metric matrix not symmetric: max asymmetry " << asym;
        throw domain_error(os.str());
    }
    Eigen::MatrixXd sym = 0.5 * (g + g.transpose().eval());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    Eigen::VectorXd eigs = es.eigenvalues();
    double lo = eigs.minCoeff();
    double hi = eigs.maxCoeff();
    bool pd = lo > 1e-10 * std::abs(sym.trace());

    MetricTensor m;
    m.theta_ = std::move(theta);
    m.g_ = std::move(sym);
    m.eigenvalues_ = std::move(eigs);
    m.condition_ = pd ? hi / lo : std::numeric_limits<double>::infinity();
    m.positive_definite_ = pd;
    return m;
}

MetricTensor MetricTensor::checked(Eigen::VectorXd theta, Eigen::MatrixXd g) {
    MetricTensor m = flagged(std::move(theta), std::move(g));
    if (!m.positive_definite()) {
        std::ostringstream os;
        os << "metric not positive definite: spectrum {";
        for (int i = 0; i < m.eigenvalues().size(); ++i)
            os << (i ? ", " : "") << m.eigenvalues()(i);
        os << "}";
        throw not_positive_definite(os.str(), to_vec(m.eigenvalues()));
    }
    return m;
}

Eigen::MatrixXd MetricTensor::inverse() const {
    if (!positive_definite_) {
        throw not_positive_definite("cannot invert a metric flagged non positive definite",
                                    to_vec(eigenvalues_));
    }
    Eigen::LLT<Eigen::MatrixXd> llt(g_);
    if (llt.info() != Eigen::Success) {
        throw not_positive_definite("Cholesky factorization failed on metric",
                                    to_vec(eigenvalues_));
    }
    return llt.solve(Eigen::MatrixXd::Identity(g_.rows(), g_.cols()));
}

} // namespace entgeo
