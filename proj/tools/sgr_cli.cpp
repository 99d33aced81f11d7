#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sgr/duality.hpp"
#include "sgr/operators.hpp"
#include "sgr/plucker.hpp"
#include "sgr/projgeo.hpp"
#include "sgr/restriction.hpp"
#include "sgr/serialize.hpp"

/* Command-line front end.  Exit codes:
     0  success (including negative predicate answers)
     1  a requested check failed (check-vector FAIL, predicate disagreement)
     2  usage or malformed input (bad flags, unreadable or invalid JSON)
     3  input fails a structural invariant (rank-deficient basis, bad labels,
        mixed levels or fields)
     4  the operation is undefined on this valid input (chart missing the
        point, non-adjacent pencil, singular operator, window overflow, ...)
   All output is deterministic for a fixed command line; nothing here
   depends on wall clock, locale, or pointer order. */

namespace {

struct IoOptions {
  std::string format = "text";
  std::string output;
};

/* Soft failure flag for checks that should flip the exit code without
   aborting the remaining output. */
int g_check_status = 0;

void add_io(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--format", io.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", io.output, "write output to this path instead of stdout");
}

sgr::Json read_json_input(const std::string& path) {
  try {
    if (path == "-") return sgr::Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw sgr::parse_error("cannot open \"" + path + "\"");
    return sgr::Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw sgr::parse_error("invalid JSON in \"" + path + "\": " + e.what());
  }
}

void emit(const IoOptions& io, const std::string& body) {
  if (io.output.empty() || io.output == "-") {
    std::cout << body << "\n";
    return;
  }
  std::ofstream out(io.output);
  if (!out) throw sgr::parse_error("cannot write \"" + io.output + "\"");
  out << body << "\n";
}

std::string render_point(const IoOptions& io, const sgr::GrassPoint& p) {
  return io.format == "json" ? sgr::point_to_json(p).dump(2) : sgr::point_to_text(p);
}

std::string render_vector(const IoOptions& io, const sgr::PluckerVector& v) {
  return io.format == "json" ? sgr::vector_to_json(v).dump(2) : sgr::vector_to_text(v);
}

/* Operator argument: a JSON file, or the shorthand mul-z / mul-z^m for
   multiplication by a power of z. */
sgr::WindowOperator parse_operator_arg(const std::string& spec) {
  if (spec.rfind("mul-z", 0) == 0) {
    std::string rest = spec.substr(5);
    int m = 1;
    if (!rest.empty()) {
      if (rest[0] != '^') throw sgr::parse_error("operator shorthand is mul-z or mul-z^m");
      m = sgr::detail::parse_int_text(rest.substr(1), "exponent");
    }
    const sgr::Field q = sgr::Field::rationals();
    return sgr::WindowOperator::multiplication(
        sgr::LaurentVector::monomial(q, m, sgr::FieldElement::one(q)));
  }
  return sgr::operator_from_json(read_json_input(spec));
}

/* Multiplication shorthands default to Q; rebuild over the point's field so
   mul-z works on GF(p) inputs too. */
sgr::WindowOperator align_operator_field(const sgr::WindowOperator& g, sgr::Field f) {
  if (g.field() == f || g.kind() != sgr::OperatorKind::multiplication) return g;
  std::map<int, sgr::FieldElement> coeffs;
  for (const auto& [exp, c] : g.unit().coefficients()) {
    if (!f.is_gf() || !c.field().is_rational()) return g;
    const auto& r = c.rational();
    const sgr::FieldElement num(f, static_cast<long long>(boost::multiprecision::numerator(r)));
    const sgr::FieldElement den(f, static_cast<long long>(boost::multiprecision::denominator(r)));
    coeffs.emplace(exp, num / den);
  }
  return sgr::WindowOperator::multiplication(sgr::LaurentVector(f, std::move(coeffs)));
}

void run_gen_relations(int level, bool stream, bool count_only, const IoOptions& io) {
  if (count_only) {
    if (level >= 5)
      throw sgr::parse_error("span computation above level 4 is refused; "
                             "use --stream to enumerate instead");
    const std::size_t count = sgr::relations(level).size();
    const std::size_t span = level == 1 ? 0 : sgr::relation_span_dimension(level);
    if (io.format == "json")
      emit(io, sgr::Json{{"generators", count}, {"span", span}}.dump(2));
    else
      emit(io, "generators " + std::to_string(count) + "\nspan " + std::to_string(span));
    return;
  }
  if (stream) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!io.output.empty() && io.output != "-") {
      file.open(io.output);
      if (!file) throw sgr::parse_error("cannot write \"" + io.output + "\"");
      out = &file;
    }
    const std::vector<sgr::FiniteIndexSet> sets = sgr::enumerate_level(level);
    std::set<sgr::QuadraticRelation> seen;
    for (const sgr::FiniteIndexSet& s : sets)
      for (const sgr::FiniteIndexSet& sp : sets)
        for (int k = 0; k < level; ++k)
          if (auto r = sgr::generate_relation(s, sp, k))
            if (seen.insert(*r).second) {
              if (io.format == "json")
                *out << sgr::relation_to_json(*r).dump() << "\n";
              else
                *out << sgr::relation_to_text(*r) << "\n";
            }
    return;
  }
  if (level >= 5)
    throw sgr::parse_error("the level-" + std::to_string(level) +
                           " relation set is too large to hold in memory; rerun with --stream");
  const std::vector<sgr::QuadraticRelation>& rels = sgr::relations(level);
  if (io.format == "json") {
    sgr::Json arr = sgr::Json::array();
    for (const sgr::QuadraticRelation& r : rels) arr.push_back(sgr::relation_to_json(r));
    emit(io, arr.dump(2));
    return;
  }
  if (rels.empty()) return;
  std::string body;
  for (const sgr::QuadraticRelation& r : rels) {
    if (!body.empty()) body += "\n";
    body += sgr::relation_to_text(r);
  }
  emit(io, body);
}

void run_check_point(const std::string& file, const IoOptions& io) {
  const sgr::GrassPoint p = sgr::point_from_json(read_json_input(file));
  const bool middle = p.dim() == p.level();
  sgr::Json report{{"level", p.level()},
                   {"field", p.field().name()},
                   {"dim", p.dim()},
                   {"index", sgr::index_of(p)}};
  std::string text = "rank ok dim " + std::to_string(p.dim()) + " of " +
                     std::to_string(2 * p.level()) + "\nindex " +
                     std::to_string(sgr::index_of(p));
  bool pass = true;
  if (middle) {
    const sgr::PluckerVector v = sgr::plucker_vector(p);
    pass = sgr::satisfies_all(v);
    std::vector<std::string> charts;
    for (const sgr::FiniteIndexSet& t : sgr::enumerate_level(p.level()))
      if (sgr::chart_membership(p, t)) charts.push_back(sgr::index_set_to_text(t));
    report["vector"] = sgr::vector_to_json(v);
    report["satisfies_all"] = pass;
    report["charts"] = charts;
    text += "\n" + sgr::vector_to_text(v);
    text += std::string("\nsatisfies_all ") + (pass ? "PASS" : "FAIL");
    text += "\ncharts";
    for (const std::string& c : charts) text += " " + c;
  } else {
    report["note"] = "no Plucker coordinates off the middle component";
    text += "\nplucker skipped (dim " + std::to_string(p.dim()) + " != level " +
            std::to_string(p.level()) + ")";
  }
  emit(io, io.format == "json" ? report.dump(2) : text);
  if (!pass) g_check_status = 1;
}

void run_check_vector(const std::string& file, const IoOptions& io) {
  const sgr::PluckerVector v = sgr::vector_from_json(read_json_input(file));
  const std::vector<sgr::QuadraticRelation>& rels = sgr::relations(v.level());
  std::size_t failed = 0;
  for (const sgr::QuadraticRelation& r : rels)
    if (!sgr::evaluate(r, v).is_zero()) ++failed;
  const bool pass = failed == 0;
  if (io.format == "json")
    emit(io, sgr::Json{{"satisfies_all", pass},
                       {"relations", rels.size()},
                       {"failed", failed}}
                 .dump(2));
  else
    emit(io, std::string("satisfies_all ") + (pass ? "PASS" : "FAIL") + "\nrelations " +
             std::to_string(rels.size()) + "\nfailed " + std::to_string(failed));
  if (!pass) g_check_status = 1;
}

void run_reconstruct(const std::string& file, const std::string& chart, const IoOptions& io) {
  const sgr::PluckerVector v = sgr::vector_from_json(read_json_input(file));
  const sgr::FiniteIndexSet t =
      chart.empty() ? v.leading_support() : sgr::index_set_from_text(v.level(), chart);
  emit(io, render_point(io, sgr::chart_reconstruct(v, t)));
}

void run_perp(const std::string& file, const IoOptions& io) {
  emit(io, render_point(io, sgr::perp(sgr::point_from_json(read_json_input(file)))));
}

void run_act(const std::string& op_spec, const std::string& file, std::optional<int> max_level,
             const IoOptions& io) {
  const sgr::GrassPoint p = sgr::point_from_json(read_json_input(file));
  const sgr::WindowOperator g = align_operator_field(parse_operator_arg(op_spec), p.field());
  const sgr::GrassPoint q = sgr::act(g, p, max_level);
  if (io.format == "json") {
    emit(io, sgr::Json{{"point", sgr::point_to_json(q)}, {"index", sgr::index_of(q)}}.dump(2));
    return;
  }
  emit(io, render_point(io, q) + "\nindex " + std::to_string(sgr::index_of(q)));
}

void run_collinear(const std::vector<std::string>& files, bool no_check, const IoOptions& io) {
  const sgr::GrassPoint p1 = sgr::point_from_json(read_json_input(files[0]));
  const sgr::GrassPoint p2 = sgr::point_from_json(read_json_input(files[1]));
  const sgr::GrassPoint p3 = sgr::point_from_json(read_json_input(files[2]));
  const bool geo = sgr::collinear_geometric(p1, p2, p3);
  const bool plu = sgr::collinear_plucker(p1, p2, p3);
  if (io.format == "json")
    emit(io, sgr::Json{{"geometric", geo}, {"plucker", plu}}.dump(2));
  else
    emit(io, std::string("geometric ") + (geo ? "true" : "false") + "\nplucker " +
             (plu ? "true" : "false"));
  if (!no_check && geo != plu) {
    std::cerr << "predicates disagree\n";
    g_check_status = 1;
  }
}

void run_restrict(const std::string& file, int to_level, const IoOptions& io) {
  const sgr::PluckerVector v = sgr::vector_from_json(read_json_input(file));
  if (to_level >= v.level()) {
    emit(io, render_vector(io, sgr::pushforward_coords(v, to_level)));
    return;
  }
  const std::optional<sgr::PluckerVector> down = sgr::pullback_coords(v, to_level);
  if (down) {
    emit(io, render_vector(io, *down));
    return;
  }
  emit(io, io.format == "json" ? sgr::Json{{"absent", true}}.dump(2) : std::string("absent"));
}

std::string render_family(const IoOptions& io, const sgr::PencilFamily& f) {
  if (io.format == "json")
    return sgr::Json{{"k", f.k()},
                     {"gap", f.gap()},
                     {"bottom", sgr::point_to_json(f.bottom())},
                     {"top", sgr::point_to_json(f.top())}}
        .dump(2);
  return "k " + std::to_string(f.k()) + "\ngap " + std::to_string(f.gap()) + "\nbottom\n" +
         sgr::point_to_text(f.bottom()) + "\ntop\n" + sgr::point_to_text(f.top());
}

void run_pencil(const std::vector<std::string>& files, bool points, const IoOptions& io) {
  const sgr::GrassPoint p1 = sgr::point_from_json(read_json_input(files[0]));
  const sgr::GrassPoint p2 = sgr::point_from_json(read_json_input(files[1]));
  const sgr::PencilFamily f = sgr::pencil(p1, p2);
  std::string body = render_family(io, f);
  if (points) {
    const std::vector<sgr::GrassPoint> all = sgr::pencil_points(f);
    if (io.format == "json") {
      sgr::Json j = sgr::Json::parse(body);
      j["points"] = sgr::Json::array();
      for (const sgr::GrassPoint& w : all) j["points"].push_back(sgr::point_to_json(w));
      body = j.dump(2);
    } else {
      for (const sgr::GrassPoint& w : all) body += "\npoint\n" + sgr::point_to_text(w);
    }
  }
  emit(io, body);
}

void run_reference_space(const std::vector<std::string>& files, const IoOptions& io) {
  std::vector<sgr::GrassPoint> pts;
  for (const std::string& f : files) pts.push_back(sgr::point_from_json(read_json_input(f)));
  const sgr::ReferenceSpaceResult r = sgr::reference_space(pts);
  const char* status = r.status == sgr::ReferenceStatus::ok ? "ok"
                       : r.status == sgr::ReferenceStatus::rank_degenerate
                           ? "rank_degenerate"
                           : "dimension_mismatch";
  if (io.format == "json") {
    sgr::Json j{{"status", status}};
    if (r.family) {
      j["k"] = r.family->k();
      j["gap"] = r.family->gap();
      j["bottom"] = sgr::point_to_json(r.family->bottom());
      j["top"] = sgr::point_to_json(r.family->top());
    }
    emit(io, j.dump(2));
    return;
  }
  std::string body = std::string("status ") + status;
  if (r.family) body += "\n" + render_family(io, *r.family);
  emit(io, body);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite window models of the Grassmannian of k((z))"};
  app.require_subcommand(1);

  unsigned seed = 0;
  app.add_option("--seed", seed, "seed for sampled workloads (all current commands are exact)");

  int gen_level = 1;
  bool gen_stream = false, gen_count = false;
  IoOptions gen_io;
  CLI::App* gen = app.add_subcommand("gen-relations", "emit the quadratic coordinate relations");
  gen->add_option("--level", gen_level, "window level")->required()->check(CLI::PositiveNumber);
  gen->add_flag("--stream", gen_stream, "emit one relation per line as generated");
  gen->add_flag("--count-only", gen_count, "print generator count and span dimension only");
  add_io(gen, gen_io);
  gen->callback([&] { run_gen_relations(gen_level, gen_stream, gen_count, gen_io); });

  std::string cp_file;
  IoOptions cp_io;
  CLI::App* cp = app.add_subcommand("check-point", "validate a basis and report its coordinates");
  cp->add_option("file", cp_file, "point JSON file, - for stdin")->required();
  add_io(cp, cp_io);
  cp->callback([&] { run_check_point(cp_file, cp_io); });

  std::string cv_file;
  IoOptions cv_io;
  CLI::App* cv = app.add_subcommand("check-vector", "test coordinates against every relation");
  cv->add_option("file", cv_file, "coordinate vector JSON file, - for stdin")->required();
  add_io(cv, cv_io);
  cv->callback([&] { run_check_vector(cv_file, cv_io); });

  std::string rc_file, rc_chart;
  IoOptions rc_io;
  CLI::App* rc = app.add_subcommand("reconstruct", "rebuild the point from its coordinates");
  rc->add_option("file", rc_file, "coordinate vector JSON file, - for stdin")->required();
  rc->add_option("--chart", rc_chart, "chart label like [-2,-1]; default leading support");
  add_io(rc, rc_io);
  rc->callback([&] { run_reconstruct(rc_file, rc_chart, rc_io); });

  std::string pp_file;
  IoOptions pp_io;
  CLI::App* pp = app.add_subcommand("perp", "residue-pairing orthogonal complement");
  pp->add_option("file", pp_file, "point JSON file, - for stdin")->required();
  add_io(pp, pp_io);
  pp->callback([&] { run_perp(pp_file, pp_io); });

  std::string act_op, act_file;
  std::optional<int> act_cap;
  IoOptions act_io;
  CLI::App* ac = app.add_subcommand("act", "apply a window operator to a point");
  ac->add_option("--op", act_op, "operator JSON file or shorthand mul-z / mul-z^m")->required();
  ac->add_option("file", act_file, "point JSON file, - for stdin")->required();
  ac->add_option("--max-level", act_cap, "refuse window growth beyond this level");
  add_io(ac, act_io);
  ac->callback([&] { run_act(act_op, act_file, act_cap, act_io); });

  std::vector<std::string> col_files;
  bool col_nocheck = false;
  IoOptions col_io;
  CLI::App* co = app.add_subcommand("collinear", "test three points by subspaces and coordinates");
  co->add_option("files", col_files, "three point JSON files")->expected(3);
  co->add_flag("--no-check", col_nocheck, "report both predicates without comparing them");
  add_io(co, col_io);
  co->callback([&] { run_collinear(col_files, col_nocheck, col_io); });

  std::string rs_file;
  int rs_to = 0;
  IoOptions rs_io;
  CLI::App* rs = app.add_subcommand("restrict", "move coordinates between window levels");
  rs->add_option("file", rs_file, "coordinate vector JSON file, - for stdin")->required();
  rs->add_option("--to-level", rs_to, "target window level")
      ->required()
      ->check(CLI::PositiveNumber);
  add_io(rs, rs_io);
  rs->callback([&] { run_restrict(rs_file, rs_to, rs_io); });

  std::vector<std::string> pen_files;
  bool pen_points = false;
  IoOptions pen_io;
  CLI::App* pe = app.add_subcommand("pencil", "the line of points through two adjacent points");
  pe->add_option("files", pen_files, "two point JSON files")->expected(2);
  pe->add_flag("--points", pen_points, "list every member point (finite fields only)");
  add_io(pe, pen_io);
  pe->callback([&] { run_pencil(pen_files, pen_points, pen_io); });

  std::vector<std::string> ref_files;
  IoOptions ref_io;
  CLI::App* rf = app.add_subcommand("reference-space",
                                    "classify the family spanned by n+2 reference points");
  rf->add_option("files", ref_files, "point JSON files (at least three)")->expected(-3);
  add_io(rf, ref_io);
  rf->callback([&] { run_reference_space(ref_files, ref_io); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const sgr::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sgr::rank_deficient_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sgr::ambient_mismatch_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sgr::level_mismatch_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sgr::field_mismatch_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sgr::charge_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sgr::wrong_component_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sgr::invalid_argument_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sgr::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_check_status;
}
