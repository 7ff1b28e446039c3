#pragma once

#include <string>

namespace entgeo {

enum class GroupKind { boltzmann, tsallis, kaniadakis, abe_borges_roditi };

/// One universality class of the entropy-group formalism. Each class is
/// determined by its group exponential G (with G(0)=0, G'(0)=1) and the
/// inverse F = G^{-1}:
///
///   Boltzmann            G(t) = t
///   Tsallis              G(t) = (e^{(1-q)t} - 1) / (1-q),   q != 1
///   Kaniadakis           G(t) = sinh((1-q)t) / (1-q),       q != 1
///   Abe-Borges-Roditi    G(t) = (e^{at} - e^{bt}) / (a-b),  a != b
///
/// The proportionality factor phi = G'(0) + G''(0) controls how the class
/// rescales the Fisher metric; construction records whether it vanishes or
/// is negative since several operations are only defined away from those
/// regimes.
class GroupClass {
public:
    static GroupClass boltzmann();
    static GroupClass tsallis(double q);
    static GroupClass kaniadakis(double q);
    static GroupClass abe_borges_roditi(double a, double b);

    GroupKind kind() const { return kind_; }
    double q() const { return q_; }
    double a() const { return a_; }
    double b() const { return b_; }

    /// phi = G'(0) + G''(0): 1, 2-q, 1, 1+a+b for the four classes.
    double phi_factor() const { return phi_; }
    bool phi_is_zero() const { return phi_zero_; }
    bool phi_is_negative() const { return phi_ < 0.0 && !phi_zero_; }

    /// Group exponential G(t). Monotone increasing on the principal branch,
    /// G(0) = 0. Throws range_overflow_error when the exponent range of
    /// double would be exceeded.
    double group_exp(double t) const;

    /// Inverse F with G(F(s)) = s. Closed forms except for the
    /// Abe-Borges-Roditi class, which is inverted by bracketed bisection
    /// plus a Newton polish on the monotone branch through the origin.
    /// Throws domain_error (naming the violated bound) when s is outside
    /// the range of G.
    double group_log(double s) const;

    /// Lazard group law Phi(x,y) = G(F(x) + F(y)). Commutative,
    /// Phi(x,0) = x.
    double group_law(double x, double y) const;

    /// Generalized product: exp(F(G(ln x) + G(ln y))) for x,y > 0, so that
    /// the deformed logarithm of a product splits into a sum.
    double group_product(double x, double y) const;

    /// Deformed logarithm G(ln x).
    double deformed_log(double x) const;

    /// Human-readable tag, e.g. "tsallis(q=0.5)".
    std::string describe() const;

private:
    GroupClass(GroupKind kind, double q, double a, double b);

    GroupKind kind_;
    double q_ = 0.0; // Tsallis / Kaniadakis parameter
    double a_ = 0.0; // ABR parameters
    double b_ = 0.0;
    double phi_ = 1.0;
    bool phi_zero_ = false;
};

} // namespace entgeo
