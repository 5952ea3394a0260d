#ifndef MALCEV_SL2REP_HPP
#define MALCEV_SL2REP_HPP

#include <string>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/constructions.hpp"
#include "malcev/identities.hpp"

namespace malcev {

/// The triple (E, H, F) does not satisfy EH = E, FH = -F, EF = H/2 or is dependent.
class Sl2Error : public AlgebraError {
public:
  using AlgebraError::AlgebraError;
};

/// The algebra does not split as Ann + N + J, or a weight-space property fails.
class DecompositionError : public AlgebraError {
public:
  using AlgebraError::AlgebraError;
};

struct Sl2Embedding {
  Vector e;
  Vector h;
  Vector f;
};

struct Decomposition {
  Sl2Embedding sl2;
  Subspace ann;
  Subspace n_part;
  Subspace j_part;
  /// +1 and -1 eigenspaces of right multiplication by H on j_part.
  Subspace v1;
  Subspace v2;
};

/// Commutative scalar algebra recovered from the Lie part.
struct CoordAlgebra {
  CommutativeScalarAlgebra u;
  /// Elements of the +1 weight space of n_part; rep_basis[i] stands for basis element i of u.
  std::vector<Vector> rep_basis;
  /// The unit, as an element of the original algebra.
  Vector unit_coords;
};

Sl2Embedding verify_sl2(const Algebra& a, const Vector& e, const Vector& h, const Vector& f);
/// Looks up the three elements by basis name.
Sl2Embedding sl2_by_names(const Algebra& a, const std::string& e, const std::string& h, const std::string& f);

/// {m : mE = mH = mF = 0}
Subspace annihilator(const Algebra& a, const Sl2Embedding& l);
/// Common kernel of m -> J(m, x, y) for x, y in {E, H, F}.
Subspace n_part(const Algebra& a, const Sl2Embedding& l);
/// Common kernel of m -> {m, x, y} for x, y in {E, H, F}.
Subspace j_part(const Algebra& a, const Sl2Embedding& l);

/// Runs the variety_h check first and throws DecompositionError if it fails.
///
/// The returned n_part and j_part are the kernels above intersected with the
/// span of the images of right multiplication by E, H and F. The raw kernels
/// both contain the annihilator, so this makes the sum direct.
Decomposition decompose(const Algebra& a, const Sl2Embedding& l, unsigned workers = 0);

CoordAlgebra coordinatize(const Algebra& a, const Decomposition& d);

/// The pairing on V = v1 over the recovered scalars; the Q-basis of V is the RREF basis of v1.
PairingForm extract_pairing(const Algebra& a, const Decomposition& d, const CoordAlgebra& u);

/// The (m+1)-dimensional irreducible module on v_0..v_m, in the E, F, H basis of sl2().
ModuleAction lm_module(unsigned m);
/// The two-dimensional module u, v with uH = u, vH = -v, uE = v, uF = 0, vE = 0, vF = -u.
ModuleAction v2_module();

nlohmann::ordered_json decomposition_to_json(const Decomposition& d);

} // namespace malcev

#endif
