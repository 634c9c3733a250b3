#include "ckq_cli.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ckq/errors.hpp"
#include "ckq/pairing.hpp"

namespace ckq::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string rational_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const json& j) {
  Rational q(j.get<std::string>());
  q.canonicalize();
  return q;
}

json meta_json(const Command& c) {
  return {{"dim", c.dim},
          {"basis", basis_name(c.basis)},
          {"j", c.sig ? [&] {
             std::string s;
             for (const auto& t : c.sig->tokens()) s += (s.empty() ? "" : ",") + t;
             return s;
           }()
                      : std::string("formal")},
          {"version", kVersion}};
}

json base_document(const Command& c) {
  return {{"meta", meta_json(c)}, {"scalars-as", "monomial-list"}, {"relations", json::array()}, {"checks", json::array()}};
}

std::string header(const Command& c) {
  return "# " + c.subcommand + " dim=" + std::to_string(c.dim) + " basis=" + basis_name(c.basis) +
         " j=" + meta_json(c)["j"].get<std::string>();
}

json matrix_to_json(const std::string& name, const RingMatrix& m) {
  json entries = json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int k = 0; k < m.cols(); ++k)
      if (!m(r, k).is_zero()) entries.push_back({{"row", r + 1}, {"col", k + 1}, {"value", scalar_to_json(m(r, k))}});
  return {{"name", name}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

void render_matrix(std::ostream& out, const std::string& name, const RingMatrix& m,
                   const std::vector<std::string>& jn) {
  out << name << " (" << m.rows() << "x" << m.cols() << ", nonzero entries)\n";
  for (int r = 0; r < m.rows(); ++r)
    for (int k = 0; k < m.cols(); ++k)
      if (!m(r, k).is_zero()) out << "  (" << r + 1 << "," << k + 1 << ") = " << to_string(m(r, k), jn) << "\n";
}

// ------------------------------------------------------------ subcommands

int do_relations(const Command& c, std::ostream& out) {
  StructureBundle b = make_bundle(c.dim, c.basis, c.sig);
  RelationSet rs = bundle_relations(b);
  if (c.format == Format::json) {
    json doc = base_document(c);
    doc["relations"] = relations_to_json(rs);
    out << doc.dump(2) << "\n";
  } else {
    const auto jn = j_names(c.dim, c.sig);
    out << header(c) << " count=" << rs.size() << "\n";
    for (const auto& r : rs) out << r.label << ": " << to_string(r.poly, jn) << " = 0\n";
  }
  return 0;
}

int do_pairings(const Command& c, std::ostream& out) {
  PairingTable tab = build_pairing_table(c.dim, c.sig);
  if (c.format == Format::json) {
    json doc = base_document(c);
    json list = json::array();
    for (const auto& [key, v] : tab.entries())
      list.push_back({{"functional", key.first.name()}, {"generator", key.second.name()}, {"value", scalar_to_json(v)}});
    doc["pairings"] = list;
    out << doc.dump(2) << "\n";
  } else {
    const auto jn = j_names(c.dim, c.sig);
    out << header(c) << " count=" << tab.entries().size() << "\n";
    for (const auto& [key, v] : tab.entries())
      out << key.first.name() << "(" << key.second.name() << ") = " << to_string(v, jn) << "\n";
  }
  return 0;
}

int do_check(const Command& c, std::ostream& out, std::ostream& err) {
  const bool want_all = c.select == "all";
  auto want = [&](const char* s) { return want_all || c.select == s; };
  const bool nilpotent = c.sig && c.sig->has_nilpotent();
  if (c.select == "contraction" && !nilpotent)
    throw UsageError("--select contraction needs at least one iota in --j");

  StructureBundle b = make_bundle(c.dim, c.basis, c.sig);
  std::optional<StructureBundle> formal_storage;
  auto formal = [&]() -> const StructureBundle& {
    if (!c.sig) return b;
    if (!formal_storage) formal_storage = make_bundle(c.dim, c.basis);
    return *formal_storage;
  };

  std::vector<VerificationReport> reports;
  std::vector<std::pair<std::string, RingMatrix>> matrices;
  auto push = [&](VerificationReport r, const std::string& name) {
    r.name = name;
    reports.push_back(std::move(r));
  };

  if (want("ybe")) push(yang_baxter(b.r(), b.sig), "ybe");
  if (want("orthogonality")) {
    // expansion under the signature must go through without errors
    RelationSet orth = expand_orthogonality(b.g(), b.metric(), Side::both, b.sig, &b.metric_inv);
    (void)orth;
    const StructureBundle& f = formal();
    RelationSet orth_formal = expand_orthogonality(f.g(), f.metric(), Side::both, std::nullopt, &f.metric_inv);
    push(fundamental_representation_check(c.dim, c.basis, orth_formal, ""),
         "orthogonality.fundamental-representation");
    push(classical_orthogonality_equivalence(c.dim), "orthogonality.classical-equivalence");
  }
  if (want("hopf")) {
    HopfReport h = hopf_checks(b);
    push(h.counit, "hopf.counit");
    push(h.coassociativity, "hopf.coassociativity");
    push(h.antipode, "hopf.antipode");
  }
  if (want("contraction") && nilpotent) {
    Contraction con = contraction_decompose(r_q(c.dim), *c.sig);
    push(con.report, "contraction");
    matrices.emplace_back("rTilde", con.r_tilde);
  }
  if (want("classical-limit")) {
    const StructureBundle& f = formal();
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    RelationSet lim = classical_limit(expand_rtt(f.r(), f.g()));
    std::set<GenSymbol> symbols;
    for (int r = 0; r < c.dim; ++r)
      for (int k = 0; k < c.dim; ++k)
        for (const auto& s : f.g()(r, k).symbols()) symbols.insert(s);
    RelationSet comm = commutativity_presentation(symbols, f.jcount());
    for (const auto& rel : lim)
      if (!reduce(rel.poly, comm).is_zero()) rep.fail(rel.label, "not in the commutativity ideal");
    for (const auto& rel : comm)
      if (!reduce(rel.poly, lim).is_zero()) rep.fail(rel.label, "not implied by the v=0 RTT relations");
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    push(rep, "classical-limit");
  }

  bool pass = true;
  for (const auto& r : reports) {
    pass = pass && r.pass;
    err << "[" << r.name << "] " << r.seconds << "s\n";
  }

  if (c.format == Format::json) {
    json doc = base_document(c);
    for (const auto& r : reports) doc["checks"].push_back(report_to_json(r));
    if (!matrices.empty()) {
      json ms = json::array();
      for (const auto& [name, m] : matrices) ms.push_back(matrix_to_json(name, m));
      doc["matrices"] = ms;
    }
    out << doc.dump(2) << "\n";
  } else {
    const auto jn = j_names(c.dim, c.sig);
    out << header(c) << " select=" << c.select << "\n";
    for (const auto& r : reports) {
      out << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
      for (const auto& w : r.witness) out << "  at " << w.location << ": " << w.residual << "\n";
    }
    for (const auto& [name, m] : matrices) render_matrix(out, name, m, jn);
    out << (pass ? "all checks passed" : "some checks failed") << "\n";
  }
  return pass ? 0 : 1;
}

int do_info(const Command& c, std::ostream& out) {
  StructureBundle b = make_bundle(c.dim, c.basis, c.sig);
  std::set<GenSymbol> gens;
  for (int r = 0; r < c.dim; ++r)
    for (int k = 0; k < c.dim; ++k)
      for (const auto& s : b.g()(r, k).symbols()) gens.insert(s);
  RelationSet rtt = expand_rtt(b.r(), b.g(), b.sig);
  RelationSet orth = expand_orthogonality(b.g(), b.metric(), Side::both, b.sig, &b.metric_inv);

  json info;
  info["generators"] = json::array();
  for (const auto& g : gens) info["generators"].push_back(g.name());
  info["functionals"] = json::array();
  for (const auto& f : functional_symbols(c.dim)) info["functionals"].push_back(f.name());
  info["rttRelations"] = rtt.size();
  info["orthogonalityRelations"] = orth.size();
  if (c.dim == 3) {
    CKAlgebraPresentation p = present_ck_algebra(3, c.sig);
    info["ckAlgebra"] = {{"generators", p.generators}, {"coproduct", p.coproduct}, {"counit", p.counit},
                         {"antipode", p.antipode},     {"commutators", p.commutators},
                         {"isomorphism", p.isomorphism}, {"notes", p.notes}};
  }

  if (c.format == Format::json) {
    json doc = base_document(c);
    doc["info"] = info;
    out << doc.dump(2) << "\n";
    return 0;
  }
  auto list = [&](const char* title, const json& arr) {
    out << title << ":";
    for (const auto& s : arr) out << " " << s.get<std::string>();
    out << "\n";
  };
  out << header(c) << "\n";
  list("generators", info["generators"]);
  list("functionals", info["functionals"]);
  out << "RTT relations: " << rtt.size() << "\n";
  out << "orthogonality relations: " << orth.size() << "\n";
  if (info.contains("ckAlgebra")) {
    out << "quantum CK algebra (stored text)\n";
    for (const char* key : {"generators", "coproduct", "counit", "antipode", "commutators", "isomorphism", "notes"}) {
      out << "  " << key << "\n";
      for (const auto& s : info["ckAlgebra"][key]) out << "    " << s.get<std::string>() << "\n";
    }
  }
  return 0;
}

}  // namespace

// ---------------------------------------------------------- serialization

json scalar_to_json(const CKScalar& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.terms()) {
    json jexp = json::array();
    for (int k = 0; k < std::max(x.jcount(), 0); ++k) jexp.push_back(m.j[static_cast<std::size_t>(k)]);
    terms.push_back({{"coeff",
                      {{"a", rational_string(c.rational_part())},
                       {"b", rational_string(c.i_part())},
                       {"c", rational_string(c.sqrt2_part())},
                       {"d", rational_string(c.i_sqrt2_part())}}},
                     {"eExp", m.e},
                     {"vDeg", m.v},
                     {"jExp", jexp}});
  }
  return terms;
}

CKScalar scalar_from_json(const json& terms, int jcount) {
  CKScalar out(jcount);
  for (const auto& t : terms) {
    const json& c = t.at("coeff");
    BaseScalar coeff(parse_rational(c.at("a")), parse_rational(c.at("b")), parse_rational(c.at("c")),
                     parse_rational(c.at("d")));
    Monomial m;
    m.e = t.at("eExp").get<int>();
    m.v = t.at("vDeg").get<int>();
    const json& jexp = t.at("jExp");
    if (static_cast<int>(jexp.size()) > kMaxJ) throw PreconditionViolation("too many j exponents");
    for (std::size_t k = 0; k < jexp.size(); ++k) m.j[k] = jexp[k].get<int>();
    out += CKScalar::term(coeff, m, jcount);
  }
  return out;
}

json relation_to_json(const Relation& r) {
  json terms = json::array();
  for (const auto& [w, c] : r.poly.terms()) {
    json word = json::array();
    for (const auto& g : w) word.push_back(g.name());
    for (auto t : scalar_to_json(c)) {
      t["word"] = word;
      terms.push_back(std::move(t));
    }
  }
  return {{"label", r.label}, {"terms", terms}};
}

Relation relation_from_json(const json& j, int jcount) {
  Relation r;
  r.label = j.at("label").get<std::string>();
  for (const auto& t : j.at("terms")) {
    Word w;
    for (const auto& s : t.at("word")) w.push_back(GenSymbol::parse(s.get<std::string>()));
    r.poly.add_term(w, scalar_from_json(json::array({t}), jcount));
  }
  return r;
}

json relations_to_json(const RelationSet& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(relation_to_json(r));
  return out;
}

std::vector<Relation> relations_from_json(const json& j, int jcount) {
  std::vector<Relation> out;
  for (const auto& r : j) out.push_back(relation_from_json(r, jcount));
  return out;
}

json report_to_json(const VerificationReport& r) {
  json w = json::array();
  for (const auto& x : r.witness) w.push_back({{"location", x.location}, {"residual", x.residual}});
  return {{"name", r.name}, {"pass", r.pass}, {"witnesses", w}};
}

std::vector<std::string> j_names(int dim, const std::optional<JSignature>& sig) {
  if (sig) return sig->slot_names();
  std::vector<std::string> out;
  for (int k = 1; k < dim; ++k) out.push_back("j" + std::to_string(k));
  return out;
}

// ------------------------------------------------------------------ driver

int run_command(const Command& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.dim < 3 || c.dim > 6) throw UsageError("--dim must be in 3..6");
    if (c.sig && c.sig->size() != c.dim - 1)
      throw UsageError("--j needs " + std::to_string(c.dim - 1) + " tokens for --dim " + std::to_string(c.dim));
    if (c.subcommand == "relations") return do_relations(c, out);
    if (c.subcommand == "pairings") return do_pairings(c, out);
    if (c.subcommand == "check") return do_check(c, out, err);
    if (c.subcommand == "info") return do_info(c, out);
    throw UsageError("unknown subcommand '" + c.subcommand + "'");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionViolation& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const BadDimension& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum Cayley-Klein orthogonal groups: relations, pairings and checks", "ckq"};
  app.require_subcommand(1);

  Command cmd;
  std::string basis = "symplectic", format = "text", jtokens;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--dim", cmd.dim, "matrix size N")->check(CLI::Range(3, 6));
    sub->add_option("--j", jtokens, "comma-separated j values from {1, iota, i}; formal j when omitted");
    sub->add_option("--basis", basis, "symplectic or cartesian")->check(CLI::IsMember({"symplectic", "cartesian"}));
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  const std::pair<const char*, const char*> subs[] = {{"relations", "RTT and orthogonality relations"},
                                                      {"pairings", "nonzero functional values on generators"},
                                                      {"info", "generator names, relation counts, CK algebra text"}};
  for (const auto& [name, help] : subs) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
  }
  CLI::App* check = app.add_subcommand("check", "run verification procedures");
  common(check);
  check->add_option("--select", cmd.select, "ybe, orthogonality, hopf, contraction, classical-limit or all")
      ->check(CLI::IsMember({"ybe", "orthogonality", "hopf", "contraction", "classical-limit", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  cmd.subcommand = app.get_subcommands().front()->get_name();
  cmd.basis = parse_basis(basis);
  cmd.format = format == "json" ? Format::json : Format::text;
  if (!jtokens.empty()) {
    try {
      cmd.sig = JSignature::parse(jtokens);
    } catch (const Error& e) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    }
  }
  return run_command(cmd, out, err);
}

}  // namespace ckq::cli
