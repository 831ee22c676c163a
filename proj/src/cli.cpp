#include "lowrank/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lowrank/classify.hpp"
#include "lowrank/cubic.hpp"
#include "lowrank/guards.hpp"
#include "lowrank/involutions.hpp"
#include "lowrank/json_io.hpp"
#include "lowrank/quadratic.hpp"

namespace lowrank::cli {

namespace {

using json_io::Json;
using json_io::to_json;

struct Options {
  std::string input;
  std::string ring;
  std::string format = "json";
  std::uint64_t p = 0;
  std::size_t n = 0;
  bool classes = false;
  bool bruteforce = false;
  int verbosity = 0;
};

struct Context {
  const Options& opts;
  std::istream& in;
  std::ostream& log;

  Json document() const {
    if (opts.input.empty()) throw InputError("missing input: pass a file, inline JSON, or - for stdin");
    std::string text;
    if (opts.input == "-") {
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    } else if (opts.input.front() == '{' || opts.input.front() == '[') {
      text = opts.input;
    } else {
      std::ifstream file(opts.input);
      if (!file) throw InputError("cannot read input file " + opts.input);
      std::stringstream ss;
      ss << file.rdbuf();
      text = ss.str();
    }
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("invalid JSON: ") + e.what());
    }
  }

  std::optional<RingSpec> ring() const {
    if (opts.ring.empty()) return std::nullopt;
    try {
      return json_io::ring_from_json(Json::parse(opts.ring));
    } catch (const Json::parse_error&) {
      // Bare names such as --ring Z are accepted too.
      return json_io::ring_from_json(Json(opts.ring));
    }
  }

  RingSpec prime_field() const {
    if (opts.p != 0) {
      if (!is_prime(opts.p)) throw InputError("--p " + std::to_string(opts.p) + " is not prime");
      return RingSpec::prime_field(opts.p);
    }
    auto r = ring();
    if (!r) throw InputError("this command needs --p or --ring");
    if (!r->is_finite()) throw InputError("this command needs a prime field");
    return *r;
  }
};

using Handler = std::function<Json(const Context&)>;

Json coeffs_in(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  return doc[key];
}

Json sub_document(const Json& doc, const char* key, const std::optional<RingSpec>& fallback) {
  Json sub = coeffs_in(doc, key);
  if (!sub.is_object()) throw InputError(std::string("\"") + key + "\" must be an object");
  if (!sub.contains("ring")) {
    if (doc.contains("ring")) {
      sub["ring"] = doc["ring"];
    } else if (fallback) {
      sub["ring"] = to_json(*fallback);
    }
  }
  return sub;
}

// quad ---------------------------------------------------------------------

Json quad_disc(const Context& ctx) {
  QuadraticAlgebra q = json_io::quadratic_from_json(ctx.document(), ctx.ring());
  RingElement d = discriminant(q).representative;
  Json out{{"discriminant", to_json(d)}};
  if (q.spec().is_finite()) {
    std::set<RingElement> members;
    for (const auto& u : field_elements(q.spec())) {
      if (!u.is_zero()) members.insert(u * u * d);
    }
    out["square_class"] = to_json(Coeffs(members.begin(), members.end()));
  }
  return out;
}

Json quad_iso(const Context& ctx) {
  Json doc = ctx.document();
  QuadraticAlgebra a = json_io::quadratic_from_json(sub_document(doc, "a", ctx.ring()));
  QuadraticAlgebra b = json_io::quadratic_from_json(sub_document(doc, "b", ctx.ring()));
  if (!(a.spec() == b.spec())) throw InputError("\"a\" and \"b\" use different rings");
  std::string method;
  std::optional<LinearMap> map;
  bool iso = false;
  if (a.spec().kind() == RingKind::Integers) {
    auto r = is_isomorphic_Z(a, b);
    method = "integral";
    iso = r.isomorphic;
    map = r.map;
  } else if (RingElement(a.spec(), 2).is_unit() && !ctx.opts.bruteforce) {
    auto r = is_isomorphic_2unit(a, b);
    method = "discriminant";
    iso = r.isomorphic;
    map = r.map;
  } else {
    auto r = is_isomorphic_bruteforce(a.algebra(), b.algebra());
    method = "bruteforce";
    iso = r.isomorphic;
    map = r.map;
  }
  Json out{{"isomorphic", iso}, {"method", method}};
  out["discriminants"] = Json::array({to_json(discriminant(a).representative), to_json(discriminant(b).representative)});
  if (map) out["x_image"] = to_json(map->images[1].coeffs());
  return out;
}

Json quad_artin_schreier(const Context& ctx) {
  QuadraticAlgebra q = json_io::quadratic_from_json(ctx.document(), ctx.ring());
  Json out{{"separable", is_separable(q)}};
  out["image"] = to_json(artin_schreier_image(q.spec()));
  if (is_separable(q)) out["class"] = to_json(artin_schreier_class(q).representative);
  out["class_count"] = artin_schreier_class_count(q.spec());
  return out;
}

Json quad_split(const Context& ctx) {
  Json doc = ctx.document();
  QuadraticAlgebra q = json_io::quadratic_from_json(doc, ctx.ring());
  SplitMaps maps = split_idempotent(q);
  auto pair_json = [&](const AlgebraElement& z) {
    auto [l, r] = split_product_element(z, 1);
    return Json::array({to_json(l[0]), to_json(r[0])});
  };
  Json out;
  out["forward"] = Json{{"1", pair_json(maps.forward.images[0])}, {"x", pair_json(maps.forward.images[1])}};
  out["backward"] = Json{{"(1,1)", to_json(maps.backward.images[0].coeffs())},
                         {"(0,1)", to_json(maps.backward.images[1].coeffs())}};
  if (doc.contains("element")) {
    AlgebraElement x(maps.forward.source, json_io::coeffs_from_json(q.spec(), doc["element"], 2));
    out["image"] = pair_json(maps.forward.apply(x));
  }
  return out;
}

// cubic --------------------------------------------------------------------

Json cubic_build(const Context& ctx) {
  return to_json(build_algebra(json_io::coefficients_from_json(ctx.document(), ctx.ring())));
}

Json cubic_verify(const Context& ctx) {
  CubicCoefficients c = json_io::coefficients_from_json(ctx.document(), ctx.ring());
  RelationReport r = validate_relations(c);
  if (!r.valid) return Json{{"valid", false}, {"violated", r.violated}};
  Json out{{"valid", true}, {"case", to_string(classify_case(c))}};
  if (ctx.opts.verbosity > 0) out["associative"] = verify_associativity(build_algebra(c)).associative;
  return out;
}

Json cubic_normalize(const Context& ctx) {
  return to_json(normalize(json_io::general_table_from_json(ctx.document(), ctx.ring())));
}

Json cubic_involution(const Context& ctx) {
  return to_json(standard_involution_E(json_io::coefficients_from_json(ctx.document(), ctx.ring())));
}

Json cubic_witness(const Context& ctx) {
  ExceptionalWitness w = exceptional_witness(json_io::coefficients_from_json(ctx.document(), ctx.ring()));
  return Json{{"I", to_json(w.big_i.coeffs())},
              {"j", to_json(w.j.coeffs())},
              {"t", Json{{"I", to_json(w.t_big_i)}, {"j", to_json(w.t_j)}}}};
}

Json cubic_matrix_rep(const Context& ctx) {
  CubicCoefficients c = json_io::coefficients_from_json(ctx.document(), ctx.ring());
  RelationReport rel = validate_relations(c);
  if (!rel.valid) throw RelationError(rel.violated);
  CubicMatrixRep rep = matrix_rep(c);
  auto failed = check_matrix_rep(c, rep);
  if (!failed.empty()) throw RelationError(failed);
  return Json{{"I", to_json(rep.big_i)}, {"J", to_json(rep.big_j)}, {"identities_hold", true}};
}

Json cubic_form(const Context& ctx) {
  return to_json(form_from_commutative(json_io::coefficients_from_json(ctx.document(), ctx.ring())));
}

// form ---------------------------------------------------------------------

Json form_disc(const Context& ctx) {
  return Json{{"discriminant", to_json(form_discriminant(json_io::form_from_json(ctx.document(), ctx.ring())))}};
}

Json form_act(const Context& ctx) {
  Json doc = ctx.document();
  BinaryCubicForm f = json_io::form_from_json(sub_document(doc, "form", ctx.ring()));
  SquareMatrix g = json_io::matrix_from_json(f.spec(), coeffs_in(doc, "g"));
  if (g.size() != 2) throw InputError("\"g\" must be 2 x 2");
  return to_json(gl2_act(g, f));
}

Json form_algebra(const Context& ctx) {
  return to_json(gross_lucianovic_algebra(json_io::form_from_json(ctx.document(), ctx.ring())));
}

// inv ----------------------------------------------------------------------

Json inv_verify(const Context& ctx) {
  Involution inv = json_io::involution_from_json(ctx.document(), ctx.ring());
  InvolutionCheck c = verify_involution(inv);
  Json out{{"involution", c.ok}};
  if (!c.ok) {
    out["violated"] = c.violated;
    if (c.witness) out["witness"] = Json::array({c.witness->first + 1, c.witness->second + 1});
  }
  out["standard"] = c.ok && verify_standard(inv);
  return out;
}

Json inv_find(const Context& ctx) {
  AlgebraPtr a = json_io::algebra_from_json(ctx.document(), ctx.ring());
  if (ctx.opts.bruteforce) {
    auto all = standard_involutions_bruteforce(a);
    Json found = Json::array();
    for (const auto& inv : all) found.push_back(to_json(inv)["images"]);
    return Json{{"count", all.size()}, {"images", std::move(found)}};
  }
  auto inv = find_standard_involution(a);
  if (!inv) return Json{{"found", false}};
  Json out{{"found", true}};
  out.update(to_json(*inv));
  return out;
}

Json inv_trace_norm(const Context& ctx) {
  Json doc = ctx.document();
  Involution inv = json_io::involution_from_json(doc, ctx.ring());
  AlgebraElement x(inv.algebra, json_io::coeffs_from_json(inv.algebra->spec(), coeffs_in(doc, "element"),
                                                          inv.algebra->rank()));
  QuadraticCertificate c = quadratic_certificate(inv, x);
  return Json{{"trace", to_json(c.t)}, {"norm", to_json(c.n)}, {"certificate_holds", true}};
}

// alg ----------------------------------------------------------------------

Json alg_assoc(const Context& ctx) {
  AlgebraPtr a = json_io::algebra_from_json(ctx.document(), ctx.ring());
  AssociativityResult r = verify_associativity(*a);
  Json out{{"associative", r.associative}};
  if (r.witness) out["witness"] = Json::array({(*r.witness)[0] + 1, (*r.witness)[1] + 1, (*r.witness)[2] + 1});
  out["commutative"] = is_commutative(*a);
  return out;
}

Json alg_degree(const Context& ctx) {
  return Json{{"degree", algebra_degree(json_io::algebra_from_json(ctx.document(), ctx.ring()))}};
}

Json alg_charpoly(const Context& ctx) {
  Json doc = ctx.document();
  AlgebraPtr a = json_io::algebra_from_json(doc, ctx.ring());
  AlgebraElement x(a, json_io::coeffs_from_json(a->spec(), coeffs_in(doc, "element"), a->rank()));
  SquareMatrix rep = left_regular_rep(x);
  Json out{{"left_regular_rep", to_json(rep)}, {"char_poly", to_json(char_poly(rep))}};
  if (a->spec().is_field()) out["min_poly"] = to_json(min_poly(x));
  return out;
}

// census / probe -----------------------------------------------------------

Json census_cubic(const Context& ctx) { return to_json(verify_main_theorem(ctx.prime_field(), ctx.opts.classes)); }

Json census_quad(const Context& ctx) { return to_json(quadratic_census(ctx.prime_field())); }

Json census_exceptional(const Context& ctx) {
  RingSpec f = ctx.prime_field();
  auto classes = exceptional_classes(f);
  Json out{{"field", to_json(f)}, {"class_count", classes.size()}};
  Json list = Json::array();
  for (const auto& cls : classes) {
    Json members = Json::array();
    for (const auto& k : cls) {
      Json c = to_json(k);
      c.erase("ring");
      members.push_back(std::move(c));
    }
    list.push_back(Json{{"size", cls.size()}, {"members", std::move(members)}});
  }
  out["classes"] = std::move(list);
  return out;
}

Json probe_mn(const Context& ctx) {
  std::size_t n = ctx.opts.n == 0 ? 3 : ctx.opts.n;
  return to_json(mn_degree_probes(ctx.prime_field(), n));
}

Json probe_degree_product(const Context& ctx) {
  Json doc = ctx.document();
  AlgebraPtr a = json_io::algebra_from_json(sub_document(doc, "a", ctx.ring()));
  AlgebraPtr b = json_io::algebra_from_json(sub_document(doc, "b", ctx.ring()));
  return to_json(degree_product_check(a, b));
}

// output -------------------------------------------------------------------

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void print_table(const Json& j, std::ostream& out, const std::string& prefix = "") {
  if (!j.is_object()) {
    out << (prefix.empty() ? "" : prefix + "  ") << scalar_text(j) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, value] : j.items()) width = std::max(width, prefix.size() + key.size());
  for (const auto& [key, value] : j.items()) {
    std::string name = prefix + key;
    bool rows_of_objects = value.is_array() && !value.empty() && value.front().is_object();
    if (value.is_object()) {
      print_table(value, out, name + ".");
    } else if (rows_of_objects) {
      out << name << ":\n";
      std::vector<std::string> columns;
      for (const auto& [col, cell] : value.front().items()) columns.push_back(col);
      std::vector<std::size_t> widths;
      for (const auto& col : columns) widths.push_back(col.size());
      std::vector<std::vector<std::string>> cells;
      for (const auto& row : value) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < columns.size(); ++c) {
          const Json& cell = row.contains(columns[c]) ? row[columns[c]] : Json();
          std::string text;
          if (cell.is_object()) {
            for (const auto& [k, v] : cell.items()) text += (text.empty() ? "" : " ") + k + "=" + scalar_text(v);
          } else {
            text = scalar_text(cell);
          }
          widths[c] = std::max(widths[c], text.size());
          line.push_back(std::move(text));
        }
        cells.push_back(std::move(line));
      }
      auto emit = [&](const std::vector<std::string>& line) {
        out << " ";
        for (std::size_t c = 0; c < line.size(); ++c) {
          int w = c + 1 == line.size() ? 0 : static_cast<int>(widths[c]);
          out << " " << std::left << std::setw(w) << line[c];
        }
        out << "\n";
      };
      emit(columns);
      for (const auto& line : cells) emit(line);
    } else {
      out << std::left << std::setw(static_cast<int>(width)) << name << "  " << scalar_text(value) << "\n";
    }
  }
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message,
                const std::vector<std::string>& violated = {}) {
  Json e{{"error", kind}, {"message", message}};
  if (!violated.empty()) e["violated"] = violated;
  err << e.dump() << "\n";
}

struct Leaf {
  CLI::App* app;
  Handler handler;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify and classify free algebras of rank 2 and 3 over Z, Q and F_p", "lowrank"};
  app.require_subcommand(1);
  Options opts;
  std::vector<Leaf> leaves;

  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h,
                  bool takes_input = true) {
    CLI::App* sub = parent->add_subcommand(name, help);
    if (takes_input) sub->add_option("input", opts.input, "JSON file, inline JSON, or - for stdin");
    sub->add_option("--ring", opts.ring, "RingSpec JSON used when the input has no \"ring\"");
    sub->add_option("--format", opts.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("-v,--verbose", opts.verbosity, "Report timing on stderr");
    leaves.push_back({sub, std::move(h)});
    return sub;
  };

  CLI::App* quad = group("quad", "Rank-2 algebras R[x]/(x^2 - tx + n)");
  leaf(quad, "disc", "Discriminant t^2 - 4n and its square class", quad_disc);
  leaf(quad, "iso", "Isomorphism test between {\"a\":{t,n}, \"b\":{t,n}}", quad_iso)
      ->add_flag("--bruteforce", opts.bruteforce, "Search all maps instead of comparing discriminants");
  leaf(quad, "artin-schreier", "Separability and Artin-Schreier class in characteristic 2", quad_artin_schreier);
  leaf(quad, "split", "The isomorphism R[x]/(x^2 - x) -> R x R", quad_split);

  CLI::App* cubic = group("cubic", "Rank-3 algebras from the universal table");
  leaf(cubic, "build", "Structure constants from (b,c,m,n,y,z)", cubic_build);
  leaf(cubic, "verify", "Check the coefficient relations and report the case", cubic_verify);
  leaf(cubic, "normalize", "Reduce a general table {a..z} to (b,c,m,n,y,z)", cubic_normalize);
  leaf(cubic, "involution", "Standard involution of an exceptional or nilproduct tuple", cubic_involution);
  leaf(cubic, "witness", "Exceptional-ring witness I = n - i, j", cubic_witness);
  leaf(cubic, "matrix-rep", "The 3 x 3 matrices I and J", cubic_matrix_rep);
  leaf(cubic, "form", "Binary cubic form of a commutative tuple", cubic_form);

  CLI::App* form = group("form", "Binary cubic forms");
  leaf(form, "disc", "Discriminant of {a,b,c,d}", form_disc);
  leaf(form, "act", "Twisted GL2 action on {\"form\":{...}, \"g\":[[..],[..]]}", form_act);
  leaf(form, "algebra", "Commutative cubic algebra attached to a form", form_algebra);

  CLI::App* inv = group("inv", "Involutions given by basis images");
  leaf(inv, "verify", "Check involution axioms and standardness", inv_verify);
  leaf(inv, "find", "Search for a standard involution", inv_find)
      ->add_flag("--bruteforce", opts.bruteforce, "List every standard involution over a prime field");
  leaf(inv, "trace-norm", "Trace and norm of \"element\"", inv_trace_norm);

  CLI::App* alg = group("alg", "Structure-constant algebras");
  leaf(alg, "assoc", "Associativity on basis triples", alg_assoc);
  leaf(alg, "degree", "Algebra degree by exhaustion over F_p", alg_degree);
  leaf(alg, "charpoly", "Left-regular representation and polynomials of \"element\"", alg_charpoly);

  CLI::App* census = group("census", "Exhaustive classification over F_p");
  leaf(census, "cubic", "Main theorem check over every valid tuple", census_cubic, false)
      ->add_flag("--classes", opts.classes, "Also partition into isomorphism classes");
  leaf(census, "quad", "Isomorphism classes of quadratic algebras", census_quad, false);
  leaf(census, "exceptional", "Isomorphism classes of exceptional and nilproduct tuples", census_exceptional, false);

  CLI::App* probe = group("probe", "Degree instance checks");
  leaf(probe, "mn", "Matrix-algebra degree probes", probe_mn, false)->add_option("--n", opts.n, "Matrix size");
  leaf(probe, "degree-product", "deg(A x B) against deg A + deg B for {\"a\":..., \"b\":...}", probe_degree_product);

  for (const char* name : {"census", "probe"}) {
    for (CLI::App* sub : app.get_subcommand(name)->get_subcommands({})) {
      sub->add_option("--p", opts.p, "Prime field size");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    emit_error(err, "input", e.what());
    return 2;
  }

  const Leaf* chosen = nullptr;
  for (const auto& l : leaves) {
    if (l.app->parsed()) chosen = &l;
  }
  if (chosen == nullptr) {
    emit_error(err, "input", "no command given");
    return 2;
  }

  Context ctx{opts, in, err};
  auto start = std::chrono::steady_clock::now();
  try {
    Json result = chosen->handler(ctx);
    if (opts.format == "table") {
      print_table(result, out);
    } else {
      out << result.dump(2) << "\n";
    }
  } catch (const InputError& e) {
    emit_error(err, "input", e.what());
    return 2;
  } catch (const RelationError& e) {
    emit_error(err, "relation", e.what(), e.violated());
    return 1;
  } catch (const GuardError& e) {
    emit_error(err, "guard", e.what());
    return 1;
  } catch (const DomainError& e) {
    emit_error(err, "domain", e.what());
    return 1;
  } catch (const Json::exception& e) {
    emit_error(err, "input", e.what());
    return 2;
  }
  if (opts.verbosity > 0) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    err << "elapsed_ms " << ms << "\n";
  }
  return 0;
}

}  // namespace lowrank::cli
