#ifndef MALCEV_ISO_HPP
#define MALCEV_ISO_HPP

#include "malcev/algebra.hpp"
#include "malcev/constructions.hpp"
#include "malcev/report.hpp"

namespace malcev {

/// Linear map between two algebras; the matrix acts on domain coordinates.
struct AlgebraMorphism {
  Algebra domain;
  Algebra codomain;
  LinearMap map;

  AlgebraMorphism(Algebra domain, Algebra codomain, Matrix m);
  Vector operator()(const Vector& x) const { return map(x); }
};

/// id on sl2(B) plus (a,b)(1) -> v(a b; 0 0), (a,b)(2) -> v(0 0; a b).
///
/// `left` is build_extension(b, det_pairing(b, alpha)) and `right` is
/// m_tilde(b, alpha); only their shapes are checked here.
AlgebraMorphism phi_map(const CommutativeScalarAlgebra& b, const Vector& alpha, const Algebra& left, const Algebra& right);

/// Multiplicativity on all basis pairs, then bijectivity by exact rank. A rank
/// defect is reported as identity "bijectivity" with first_failure = {rank}.
IdentityReport verify_morphism(const AlgebraMorphism& f);

/// g after f.
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);

/// True iff <u, v> equals the unit of the scalar algebra.
bool is_m7_form(const PairingForm& p, const Vector& u, const Vector& v);

/// Both normalizations of the M7 criterion for a pairing on B^2.
struct M7FormSummary {
  /// <(1/2, 0), (0, -1/2)>
  Vector value;
  /// -<(1/2, 0), (0, 1/2)>
  Vector alpha;
  bool is_m7 = false;
};
M7FormSummary m7_form_summary(const PairingForm& p);

nlohmann::ordered_json morphism_to_json(const AlgebraMorphism& f);
/// Reads {"domain", "codomain", "matrix"}; names and shape must match the given algebras.
AlgebraMorphism morphism_from_json(const nlohmann::json& doc, const Algebra& domain, const Algebra& codomain);

} // namespace malcev

#endif
