#include "malcev/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "malcev/identities.hpp"
#include "malcev/iso.hpp"
#include "malcev/sl2rep.hpp"

namespace malcev {

namespace {

/// Bad files, bad flags, malformed documents.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  unsigned workers = 0;

  bool json() const { return format == "json"; }
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Algebra read_algebra(const std::string& path) {
  try {
    return load_algebra(read_json(path));
  } catch (const SchemaError& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

CommutativeScalarAlgebra read_base(const std::string& path) {
  Algebra a = read_algebra(path);
  std::optional<Vector> unit = find_unit(a);
  if (!unit) {
    IdentityReport r = IdentityReport::fail("unit", {}, a.zero(), a.basis_names(), 0);
    throw ScalarAlgebraError("'" + a.name() + "' has no unit element", std::move(r));
  }
  return verify_scalar_algebra(a, *unit);
}

std::string format_vector(const Vector& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string coef = v[i].str();
    if (out.empty()) {
      out = coef + "*" + names.at(i);
    } else if (coef.front() == '-') {
      out += " - " + coef.substr(1) + "*" + names.at(i);
    } else {
      out += " + " + coef + "*" + names.at(i);
    }
  }
  return out.empty() ? "0" : out;
}

/// Scalars that are multiples of the unit print as plain rationals.
std::string format_scalar(const CommutativeScalarAlgebra& b, const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (b.unit[i].is_zero()) continue;
    Rational c = v[i] / b.unit[i];
    if (c * b.unit == v) return c.str();
    break;
  }
  return format_vector(v, b.algebra.basis_names());
}

nlohmann::ordered_json report_json(const IdentityReport& r, const std::vector<std::string>* tuple_names = nullptr) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["passed"] = r.passed;
  j["first_failure"] = r.first_failure ? nlohmann::ordered_json(*r.first_failure) : nlohmann::ordered_json(nullptr);
  if (r.first_failure && tuple_names) {
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (auto k : *r.first_failure) names.push_back(k < tuple_names->size() ? (*tuple_names)[k] : std::to_string(k));
    j["first_failure_names"] = std::move(names);
  }
  j["failure_value"] =
      r.failure_value ? coords_to_json(*r.failure_value, r.value_basis) : nlohmann::ordered_json(nullptr);
  j["tuples_checked"] = r.tuples_checked;
  return j;
}

/// `tuple_names` labels the indices of first_failure when they are basis indices.
void print_report(std::ostream& out, const Options& opt, const IdentityReport& r,
                  const std::vector<std::string>* tuple_names) {
  if (opt.json()) {
    out << report_json(r, tuple_names).dump(2) << "\n";
    return;
  }
  out << r.identity << ": " << (r.passed ? "PASS" : "FAIL");
  if (r.first_failure) {
    out << " at (";
    for (std::size_t i = 0; i < r.first_failure->size(); ++i) {
      std::size_t k = (*r.first_failure)[i];
      out << (i ? ", " : "") << (tuple_names && k < tuple_names->size() ? (*tuple_names)[k] : std::to_string(k));
    }
    out << ")";
  }
  if (r.failure_value) out << " value " << format_vector(*r.failure_value, r.value_basis);
  out << " [" << r.tuples_checked << " tuples]";
  if (!r.detail.empty()) out << " " << r.detail;
  out << "\n";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

// --- Subcommands -----------------------------------------------------------

int cmd_check(std::ostream& out, const Options& opt, const std::string& file, const std::string& which) {
  Algebra a = read_algebra(file);
  IdentityReport r;
  if (which == "anticommutative") {
    r = check_anticommutative(a);
  } else {
    auto id = parse_identity(which);
    if (!id) throw InputError("unknown identity '" + which + "'");
    r = check_identity(a, *id, opt.workers);
  }
  print_report(out, opt, r, &a.basis_names());
  return r.passed ? kExitPass : kExitFailure;
}

int cmd_decompose(std::ostream& out, const Options& opt, const std::string& file, const std::string& sl2_names,
                  bool coord, bool pairing) {
  Algebra a = read_algebra(file);
  auto names = split(sl2_names, ',');
  if (names.size() != 3) throw InputError("--sl2 expects three comma-separated basis names E,H,F");
  for (const auto& n : names)
    if (!a.index_of(n)) throw InputError("no basis element named '" + n + "' in " + a.name());
  Sl2Embedding l = sl2_by_names(a, names[0], names[1], names[2]);
  Decomposition d = decompose(a, l, opt.workers);

  std::optional<CoordAlgebra> u;
  std::optional<PairingForm> p;
  if (coord || pairing) u = coordinatize(a, d);
  if (pairing) p = extract_pairing(a, d, *u);

  if (opt.json()) {
    nlohmann::ordered_json j;
    j["algebra"] = a.name();
    j["basis"] = a.basis_names();
    j["sl2"] = names;
    const auto parts = decomposition_to_json(d);
    for (auto& [k, v] : parts.items()) j[k] = v;
    if (u) {
      j["scalars"] = to_document(u->u.algebra);
      j["unit"] = coords_to_json(u->u.unit, u->u.algebra.basis_names());
    }
    if (p) {
      nlohmann::ordered_json grid = nlohmann::ordered_json::array();
      for (const auto& row : p->entries) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& e : row) r.push_back(coords_to_json(e, p->scalars.algebra.basis_names()));
        grid.push_back(std::move(r));
      }
      j["pairing"] = std::move(grid);
    }
    out << j.dump(2) << "\n";
    return kExitPass;
  }

  out << "dims ann/n/j: " << d.ann.dim() << "/" << d.n_part.dim() << "/" << d.j_part.dim() << " (v1 " << d.v1.dim()
      << ", v2 " << d.v2.dim() << ")\n";
  auto print_space = [&](const char* label, const Subspace& s) {
    out << label << ":";
    if (s.dim() == 0) out << " 0";
    for (const auto& v : s.basis_vectors()) out << " [" << format_vector(v, a.basis_names()) << "]";
    out << "\n";
  };
  print_space("ann", d.ann);
  print_space("n", d.n_part);
  print_space("j", d.j_part);
  print_space("v1", d.v1);
  print_space("v2", d.v2);
  if (u) {
    out << "scalars: dim " << u->u.dim() << ", unit " << format_vector(u->u.unit, u->u.algebra.basis_names()) << "\n";
    const auto& ua = u->u.algebra;
    for (std::size_t i = 0; i < ua.dim(); ++i)
      for (std::size_t j = i; j < ua.dim(); ++j)
        out << "  " << ua.basis_name(i) << " * " << ua.basis_name(j) << " = "
            << format_vector(ua.product(i, j), ua.basis_names()) << "\n";
  }
  if (p) {
    out << "pairing:\n";
    for (const auto& row : p->entries) {
      out << " ";
      for (const auto& e : row) out << " " << format_scalar(p->scalars, e);
      out << "\n";
    }
  }
  return kExitPass;
}

/// Pairing file: {"rank": r, "grid": [[entry, ...], ...]} where each entry is a
/// scalar expression string, an integer, or an object of basis coordinates.
std::vector<std::vector<Vector>> read_pairing_grid(const CommutativeScalarAlgebra& b, const std::string& path,
                                                   std::optional<std::size_t>& rank) {
  nlohmann::json doc = read_json(path);
  const nlohmann::json* grid = &doc;
  if (doc.is_object()) {
    if (!doc.contains("grid")) throw InputError("'" + path + "' lacks a 'grid' field");
    grid = &doc["grid"];
    if (doc.contains("rank")) {
      if (!doc["rank"].is_number_unsigned()) throw InputError("'rank' must be a non-negative integer");
      std::size_t r = doc["rank"].get<std::size_t>();
      if (rank && *rank != r) throw InputError("--rank disagrees with the rank in '" + path + "'");
      rank = r;
    }
  }
  if (!grid->is_array()) throw InputError("pairing grid must be an array of rows");
  if (!rank) rank = grid->size();
  if (grid->size() != *rank) throw InputError("pairing grid must have " + std::to_string(*rank) + " rows");
  std::vector<std::vector<Vector>> out;
  for (const auto& row : *grid) {
    if (!row.is_array() || row.size() != *rank) throw InputError("pairing grid rows must have length " + std::to_string(*rank));
    std::vector<Vector> r;
    for (const auto& e : row) {
      if (e.is_string()) {
        r.push_back(parse_scalar(b, e.get<std::string>()));
      } else if (e.is_number_integer()) {
        r.push_back(b.scalar(Rational(e.get<long long>())));
      } else if (e.is_object()) {
        try {
          r.push_back(coords_from_json(e, b.algebra.basis_names()));
        } catch (const SchemaError& err) {
          throw InputError(std::string("pairing entry: ") + err.what());
        }
      } else {
        throw InputError("pairing entries must be strings, integers or coordinate objects");
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

int cmd_construct(std::ostream& out, std::ostream& err, const Options& opt, const std::string& kind,
                  const std::string& base_path, const std::string& alpha_text, const std::string& lambda_text,
                  std::optional<std::size_t> rank, const std::string& pairing_path, const std::string& output) {
  auto need_base = [&]() {
    if (base_path.empty()) throw InputError("construct " + kind + " needs --base");
    return read_base(base_path);
  };
  Algebra a;
  if (kind == "m5") {
    a = m5();
  } else if (kind == "m7-scalar") {
    a = m7_scalar(lambda_text.empty() ? Rational(1) : Rational::parse(lambda_text));
  } else if (kind == "sl2-of") {
    a = sl2_of(need_base());
  } else if (kind == "m7-of") {
    a = m7_of(need_base());
  } else if (kind == "m-tilde") {
    CommutativeScalarAlgebra b = need_base();
    if (alpha_text.empty()) throw InputError("construct m-tilde needs --alpha");
    a = m_tilde(b, parse_scalar(b, alpha_text));
  } else if (kind == "extension") {
    CommutativeScalarAlgebra b = need_base();
    std::vector<std::vector<Vector>> grid;
    if (!pairing_path.empty()) {
      grid = read_pairing_grid(b, pairing_path, rank);
    } else {
      const std::size_t r = rank.value_or(1);
      grid.assign(r, std::vector<Vector>(r, Vector(b.dim())));
      rank = r;
    }
    a = build_extension(b, free_pairing(b, *rank, grid));
  } else {
    throw InputError("unknown construction '" + kind + "'");
  }

  const std::string doc = dump_algebra(a);
  if (!(parse_algebra(doc) == a)) throw AlgebraError("constructed document does not round-trip");
  IdentityReport r = check_identity(a, Identity::malcev, opt.workers);
  if (output.empty()) {
    out << doc;
  } else {
    std::ofstream f(output);
    if (!f) throw InputError("cannot write '" + output + "'");
    f << doc;
    if (!f) throw InputError("failed writing '" + output + "'");
    if (opt.json()) {
      nlohmann::ordered_json j;
      j["name"] = a.name();
      j["dim"] = a.dim();
      j["output"] = output;
      j["malcev"] = report_json(r, &a.basis_names());
      out << j.dump(2) << "\n";
    } else {
      out << "wrote " << a.name() << " (dim " << a.dim() << ") to " << output << "\n";
      print_report(out, opt, r, &a.basis_names());
    }
  }
  if (!r.passed) {
    if (output.empty()) print_report(err, Options{}, r, &a.basis_names());
    return kExitFailure;
  }
  return kExitPass;
}

int cmd_iso(std::ostream& out, const Options& opt, const std::string& left, const std::string& right,
            const std::string& map_path, bool det_phi, const std::string& base_path, const std::string& alpha_text) {
  if (det_phi) {
    if (base_path.empty() || alpha_text.empty()) throw InputError("--det-phi needs --base and --alpha");
    CommutativeScalarAlgebra b = read_base(base_path);
    Vector alpha = parse_scalar(b, alpha_text);
    PairingForm p = det_pairing(b, alpha);
    Algebra l = build_extension(b, p);
    Algebra rt = m_tilde(b, alpha);
    AlgebraMorphism f = phi_map(b, alpha, l, rt);
    IdentityReport r = verify_morphism(f);
    M7FormSummary s = m7_form_summary(p);
    r.detail = "alpha = " + format_scalar(b, s.alpha) + ", <(1/2,0),(0,-1/2)> = " + format_scalar(b, s.value) +
               (s.is_m7 ? " (M7 form)" : "");
    print_report(out, opt, r, &l.basis_names());
    return r.passed ? kExitPass : kExitFailure;
  }
  if (left.empty() || right.empty() || map_path.empty()) {
    throw InputError("iso needs --left, --right and --map, or --det-phi");
  }
  Algebra l = read_algebra(left);
  Algebra rt = read_algebra(right);
  AlgebraMorphism f = [&] {
    try {
      return morphism_from_json(read_json(map_path), l, rt);
    } catch (const SchemaError& e) {
      throw InputError("'" + map_path + "': " + e.what());
    } catch (const DimensionError& e) {
      throw InputError("'" + map_path + "': " + e.what());
    }
  }();
  IdentityReport r = verify_morphism(f);
  print_report(out, opt, r, r.identity == "homomorphism" ? &l.basis_names() : nullptr);
  return r.passed ? kExitPass : kExitFailure;
}

int cmd_plucker(std::ostream& out, const Options& opt, std::optional<std::size_t> n, const std::string& grid_path) {
  IdentityReport r;
  if (n) {
    if (*n < 2) throw InputError("--n must be at least 2");
    r = det_plucker_generators(*n);
  } else if (!grid_path.empty()) {
    CommutativeScalarAlgebra q = rationals();
    std::optional<std::size_t> rank;
    r = plucker_check(q, read_pairing_grid(q, grid_path, rank));
  } else {
    throw InputError("plucker needs --n or --grid");
  }
  print_report(out, opt, r, nullptr);
  return r.passed ? kExitPass : kExitFailure;
}

} // namespace

Vector parse_scalar(const CommutativeScalarAlgebra& b, const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty scalar expression");
  Vector out(b.dim());
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("malformed scalar expression '" + text + "'");
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    if (term.empty()) throw std::invalid_argument("malformed scalar expression '" + text + "'");

    Rational coef(1);
    std::string name = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      coef = Rational::parse(term.substr(0, star));
      name = term.substr(star + 1);
    }
    Vector v;
    if (auto idx = b.algebra.index_of(name)) {
      v = b.algebra.basis_vector(*idx);
    } else if (term.find('*') == std::string::npos) {
      v = b.unit;
      coef = Rational::parse(term);
    } else {
      throw std::invalid_argument("unknown basis name '" + name + "' in '" + text + "'");
    }
    axpy(out, negative ? -coef : coef, v);
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact structure-constant tools for Malcev algebras", "malcev"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::optional<unsigned> workers_flag;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--workers", workers_flag, "Worker threads for identity scans (default: MALCEV_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);

  std::string file;
  std::string identity = "malcev";
  auto* check = app.add_subcommand("check", "Scan an algebra for an identity");
  check->add_option("file", file, "Algebra document")->required();
  check->add_option("--identity", identity, "anticommutative | malcev | lie | variety-h")
      ->check(CLI::IsMember({"anticommutative", "malcev", "lie", "variety-h", "variety_h"}));

  std::string sl2_names;
  bool coord = false;
  bool pairing = false;
  auto* dec = app.add_subcommand("decompose", "Split an algebra containing sl2 into Ann + N + J");
  dec->add_option("file", file, "Algebra document")->required();
  dec->add_option("--sl2", sl2_names, "Basis names of E,H,F")->required();
  dec->add_flag("--coordinatize", coord, "Recover the scalar algebra of the Lie part");
  dec->add_flag("--pairing", pairing, "Recover the pairing on the non-Lie part");

  std::string kind;
  std::string base_path;
  std::string alpha_text;
  std::string lambda_text;
  std::optional<std::size_t> rank;
  std::string pairing_path;
  std::string output;
  auto* con = app.add_subcommand("construct", "Write one of the standard algebras as a document");
  con->add_option("kind", kind, "m5 | m7-scalar | sl2-of | m7-of | m-tilde | extension")
      ->required()
      ->check(CLI::IsMember({"m5", "m7-scalar", "sl2-of", "m7-of", "m-tilde", "extension"}));
  con->add_option("--base", base_path, "Scalar algebra document");
  con->add_option("--alpha", alpha_text, "Parameter in the base algebra, e.g. 1, t, 2 - t");
  con->add_option("--lambda", lambda_text, "Rational pairing value for m7-scalar");
  con->add_option("--rank", rank, "Rank of the free module for extension");
  con->add_option("--pairing", pairing_path, "Pairing grid file for extension");
  con->add_option("-o,--output", output, "Output path (default: stdout)");

  std::string left;
  std::string right;
  std::string map_path;
  bool det_phi = false;
  auto* iso = app.add_subcommand("iso", "Verify that a linear map is an algebra isomorphism");
  iso->add_option("--left", left, "Domain algebra document");
  iso->add_option("--right", right, "Codomain algebra document");
  iso->add_option("--map", map_path, "Morphism document");
  iso->add_flag("--det-phi", det_phi, "Check id + phi between the det extension and M-tilde");
  iso->add_option("--base", base_path, "Scalar algebra document");
  iso->add_option("--alpha", alpha_text, "Parameter in the base algebra");

  std::optional<std::size_t> plucker_n;
  std::string grid_path;
  auto* plk = app.add_subcommand("plucker", "Check the three-term Plucker relations");
  plk->add_option("--n", plucker_n, "Check the 2x2 minors of a 2-column matrix with n rows");
  plk->add_option("--grid", grid_path, "Rational skew grid file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    opt.workers = workers_flag ? *workers_flag : default_workers();
    if (check->parsed()) return cmd_check(out, opt, file, identity);
    if (dec->parsed()) return cmd_decompose(out, opt, file, sl2_names, coord, pairing);
    if (con->parsed())
      return cmd_construct(out, err, opt, kind, base_path, alpha_text, lambda_text, rank, pairing_path, output);
    if (iso->parsed()) return cmd_iso(out, opt, left, right, map_path, det_phi, base_path, alpha_text);
    if (plk->parsed()) return cmd_plucker(out, opt, plucker_n, grid_path);
    err << "error: no subcommand\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ForeignElementError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ScalarAlgebraError& e) {
    err << "failure: " << e.what() << "\n";
    print_report(err, Options{}, e.report(), nullptr);
    return kExitFailure;
  } catch (const PairingError& e) {
    err << "failure: " << e.what() << "\n";
    print_report(err, Options{}, e.report(), nullptr);
    return kExitFailure;
  } catch (const AlgebraError& e) {
    err << "failure: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

} // namespace malcev
