#ifndef MALCEV_IDENTITIES_HPP
#define MALCEV_IDENTITIES_HPP

#include <optional>
#include <string>
#include <string_view>

#include "malcev/algebra.hpp"
#include "malcev/report.hpp"

namespace malcev {

/// (xy)z + (yz)x + (zx)y
Vector jacobian(const Algebra& a, const Vector& x, const Vector& y, const Vector& z);

/// {x,y,z} = (xy)z - (xz)y + 2x(yz). Also checks that it equals J(x,y,z) + 3x(yz).
Vector brace(const Algebra& a, const Vector& x, const Vector& y, const Vector& z);

/// h(y,z,t,x,u) = {yz,t,u}x + {yz,t,x}u + {yx,z,u}t + {yu,z,x}t
Vector h_val(const Algebra& a, const Vector& y, const Vector& z, const Vector& t, const Vector& x, const Vector& u);

/// p(x,y,z,t) = -{zt,x,y} - {yt,z,x} + {xt,y,z}
Vector p_val(const Algebra& a, const Vector& x, const Vector& y, const Vector& z, const Vector& t);

/// The linear map x -> p(x,y,z,t).
LinearMap alpha_map(const Algebra& a, const Vector& y, const Vector& z, const Vector& t);

enum class Identity { malcev, lie, variety_h };

std::string identity_name(Identity which);
/// Accepts "malcev", "lie", "variety_h" and "variety-h".
std::optional<Identity> parse_identity(std::string_view text);

/// Worker count from MALCEV_WORKERS; throws std::invalid_argument when the
/// variable is set but is not a positive integer.
std::optional<unsigned> workers_from_env();
/// MALCEV_WORKERS if set, otherwise the hardware concurrency (at least 1).
unsigned default_workers();

/// Exhaustive basis-tuple scan. Tuples are ordered lexicographically in the
/// argument order of the identity: (x,y,z,t) for malcev, (x,y,z) for lie and
/// (y,z,t,x,u) for variety_h. workers = 0 selects default_workers().
///
/// When the algebra is not anticommutative the anticommutativity report is
/// returned instead.
IdentityReport check_identity(const Algebra& a, Identity which, unsigned workers = 0);

/// Passes iff (b_i b_j)f = b_i(b_j f) = (b_i f)b_j for every basis pair.
IdentityReport check_centroid(const Algebra& a, const LinearMap& f);

} // namespace malcev

#endif
