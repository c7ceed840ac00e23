// sgt: command line front end for the finite semigroup library.
//
// Exit status: 0 on success, 1 on usage, parse or precondition errors, 2 when
// a verification reports failure.

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sgt/congruence.hpp"
#include "sgt/green.hpp"
#include "sgt/io.hpp"
#include "sgt/semigroup.hpp"
#include "sgt/structure.hpp"
#include "sgt/verify.hpp"

using json = nlohmann::json;
using namespace sgt;

namespace {

  constexpr int kExitError  = 1;
  constexpr int kExitFailed = 2;

  struct Options {
    bool        as_json = false;
    std::string input;
    std::string format = "auto";
    std::string second;

    std::string pairs;
    std::string labels;
    std::string sigma_pairs;
    std::string sigma_labels;
    bool        two_sided = false;
    std::size_t max       = 0;
    Elem        from      = 0;
    Elem        to        = 0;
    Elem        element   = 0;
    std::string mode      = "cr";
    bool        construct = false;
    bool        to_coordinates = false;

    std::string construction;
    std::string generators;
    std::string theta;
    std::string ideal;
    Elem        identity = 0;
    bool        sweep      = false;
    bool        full_pairs = false;
    std::size_t exact_limit = kDefaultExactLimit;
  };

  ////////////////////////////////////////////////////////////////////////
  // Argument helpers
  ////////////////////////////////////////////////////////////////////////

  std::vector<Elem> parse_elements(std::string const& text, std::string const& what) {
    std::string cleaned = text;
    std::replace_if(
        cleaned.begin(),
        cleaned.end(),
        [](char c) { return c == ',' || c == ';' || c == '(' || c == ')'; },
        ' ');
    std::istringstream in(cleaned);
    std::vector<Elem>  out;
    std::string        token;
    while (in >> token) {
      std::size_t used  = 0;
      long long   value = -1;
      try {
        value = std::stoll(token, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != token.size() || value < 0) {
        throw Error(ErrorKind::parse_error,
                    what + ": '" + token + "' is not an element index");
      }
      out.push_back(Elem(value));
    }
    return out;
  }

  PairSet parse_pairs(std::string const& text, std::size_t n) {
    auto const values = parse_elements(text, "--pairs");
    if (values.size() % 2 != 0) {
      throw Error(ErrorKind::parse_error, "pairs need an even number of elements");
    }
    PairSet out;
    for (std::size_t k = 0; k < values.size(); k += 2) {
      if (values[k] >= n || values[k + 1] >= n) {
        throw Error(ErrorKind::range_error, "pair element out of range");
      }
      out.insert(values[k], values[k + 1]);
    }
    return out;
  }

  void check_element(Elem x, std::size_t n, std::string const& what) {
    if (x >= n) {
      throw Error(ErrorKind::range_error,
                  what + " " + std::to_string(x) + " is out of range for a "
                      + std::to_string(n) + "-element semigroup");
    }
  }

  // rho from --labels, else from --pairs, else the universal relation.
  RightCongruence relation_from(FiniteSemigroup const& s,
                                std::string const&     labels,
                                std::string const&     pairs,
                                bool                   two_sided = false) {
    if (!labels.empty()) {
      auto const values = parse_elements(labels, "--labels");
      if (values.size() != s.size()) {
        throw Error(ErrorKind::mismatched_input,
                    "--labels needs one label per element");
      }
      return RightCongruence::from_labels(values);
    }
    if (!pairs.empty()) {
      return rc_generate(s, parse_pairs(pairs, s.size()), two_sided);
    }
    return RightCongruence::universal(s.size());
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON helpers
  ////////////////////////////////////////////////////////////////////////

  json congruence_json(RightCongruence const& rho) {
    return {{"index", rho.index()}, {"classes", rho.classes()}};
  }

  json pairs_json(PairSet const& x) {
    json out = json::array();
    for (auto [a, b] : x) {
      out.push_back({a, b});
    }
    return out;
  }

  json optional_elem(std::optional<Elem> x) {
    return x ? json(*x) : json(nullptr);
  }

  json multiplier_json(Elem s) {
    return s == kOne ? json("1") : json(s);
  }

  json table_json(FiniteSemigroup const& s) {
    json rows = json::array();
    for (Elem a = 0; a < s.size(); ++a) {
      rows.push_back(std::vector<Elem>(s.row(a).begin(), s.row(a).end()));
    }
    return rows;
  }

  json report_json(VerificationReport const& r) {
    json out{{"construction", r.construction},
             {"inputs", r.inputs_summary},
             {"pairs", pairs_json(r.pairs)},
             {"generators", r.generators},
             {"pass", r.pass}};
    if (r.expected) {
      out["expected"] = congruence_json(*r.expected);
    }
    if (r.computed) {
      out["computed"] = congruence_json(*r.computed);
    }
    if (r.target_size != 0) {
      out["generated_size"] = r.generated_size;
      out["target_size"]    = r.target_size;
    }
    if (r.witness) {
      out["witness"] = {r.witness->first, r.witness->second};
    }
    if (r.missing) {
      out["missing"] = *r.missing;
    }
    return out;
  }

  std::string join(std::vector<std::string> const& parts, std::string const& sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      out += (k == 0 ? "" : sep) + parts[k];
    }
    return out;
  }

  std::string labels_of(FiniteSemigroup const& s, std::vector<Elem> const& xs) {
    std::vector<std::string> parts;
    for (auto x : xs) {
      parts.push_back(s.label(x));
    }
    return join(parts, " ");
  }

  void print_table(std::ostream& out, FiniteSemigroup const& s) {
    for (Elem a = 0; a < s.size(); ++a) {
      for (Elem b = 0; b < s.size(); ++b) {
        out << (b == 0 ? "  " : " ") << s.mul(a, b);
      }
      out << '\n';
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Verbs
  ////////////////////////////////////////////////////////////////////////

  ParsedInput load(Options const& o) {
    if (o.input.empty()) {
      throw Error(ErrorKind::parse_error, "no input; pass -i PATH or -i -");
    }
    return parse_file(o.input, parse_format(o.format));
  }

  int run_info(Options const& o) {
    auto const s = load(o).semigroup;
    auto const p = classify(s);
    std::vector<std::pair<std::string, bool>> flags{
        {"commutative", p.commutative},
        {"band", p.band},
        {"semilattice", p.semilattice},
        {"group", p.group},
        {"monoid", p.monoid},
        {"has_zero", p.has_zero},
        {"left_zero", p.left_zero},
        {"right_zero", p.right_zero},
        {"nilpotent", p.nilpotent},
        {"completely_regular", p.completely_regular},
        {"cryptogroup", p.cryptogroup},
        {"left_simple", p.left_simple},
        {"right_simple", p.right_simple},
        {"simple", p.simple},
        {"zero_simple", p.zero_simple},
        {"completely_simple", p.completely_simple},
        {"completely_zero_simple", p.completely_zero_simple}};
    if (o.as_json) {
      json props = json::object();
      for (auto const& [name, value] : flags) {
        props[name] = value;
      }
      json out{{"size", s.size()},
               {"identity", optional_elem(s.identity())},
               {"zero", optional_elem(s.zero())},
               {"idempotents", p.idempotents},
               {"nilpotency_class",
                p.nilpotency_class ? json(*p.nilpotency_class) : json(nullptr)},
               {"properties", props}};
      std::cout << out.dump() << '\n';
      return 0;
    }
    std::cout << "size: " << s.size() << '\n'
              << "identity: " << (s.identity() ? s.label(*s.identity()) : "none")
              << '\n'
              << "zero: " << (s.zero() ? s.label(*s.zero()) : "none") << '\n'
              << "idempotents: " << p.idempotents << '\n';
    if (p.nilpotency_class) {
      std::cout << "nilpotency class: " << *p.nilpotency_class << '\n';
    }
    for (auto const& [name, value] : flags) {
      std::cout << name << ": " << (value ? "yes" : "no") << '\n';
    }
    return 0;
  }

  int run_green(Options const& o) {
    auto const s        = load(o).semigroup;
    auto const g        = green_data(s);
    auto const d_classes = g.d.classes();

    json d_json = json::array();
    for (auto const& members : d_classes) {
      // rows are R-classes and columns L-classes, by smallest member
      std::vector<Elem> rows, cols;
      for (auto x : members) {
        if (std::find(rows.begin(), rows.end(), g.r.class_of(x)) == rows.end()) {
          rows.push_back(g.r.class_of(x));
        }
        if (std::find(cols.begin(), cols.end(), g.l.class_of(x)) == cols.end()) {
          cols.push_back(g.l.class_of(x));
        }
      }
      json r_rows = json::array(), l_cols = json::array(), cells = json::array();
      for (auto r : rows) {
        std::vector<Elem> row;
        json              cell_row = json::array();
        for (auto x : members) {
          if (g.r.class_of(x) == r) {
            row.push_back(x);
          }
        }
        for (auto l : cols) {
          std::vector<Elem> cell;
          for (auto x : members) {
            if (g.r.class_of(x) == r && g.l.class_of(x) == l) {
              cell.push_back(x);
            }
          }
          cell_row.push_back(
              {{"members", cell}, {"group", g.group_h[g.h.class_of(cell.front())]}});
        }
        r_rows.push_back(row);
        cells.push_back(cell_row);
      }
      for (auto l : cols) {
        std::vector<Elem> col;
        for (auto x : members) {
          if (g.l.class_of(x) == l) {
            col.push_back(x);
          }
        }
        l_cols.push_back(col);
      }
      bool regular = std::any_of(members.begin(), members.end(), [&](Elem x) {
        return g.group_h[g.h.class_of(x)];
      });
      d_json.push_back({{"members", members},
                        {"R_rows", rows.size()},
                        {"L_cols", cols.size()},
                        {"H_size", members.size() / (rows.size() * cols.size())},
                        {"is_group", regular},
                        {"rows", r_rows},
                        {"cols", l_cols},
                        {"cells", cells}});
    }
    json subgroups = json::array();
    for (auto const& m : maximal_subgroups(s)) {
      subgroups.push_back({{"h_class", m.h_class}, {"order", m.group.size()}});
    }

    if (o.as_json) {
      json out{{"R", congruence_json(g.r)},
               {"L", congruence_json(g.l)},
               {"H", congruence_json(g.h)},
               {"D", d_json},
               {"maximal_subgroups", subgroups}};
      std::cout << out.dump() << '\n';
      return 0;
    }
    std::cout << "R-classes: " << g.r.index() << ", L-classes: " << g.l.index()
              << ", H-classes: " << g.h.index() << ", D-classes: " << g.d.index()
              << '\n';
    std::size_t k = 0;
    for (auto const& d : d_json) {
      std::cout << "\nD-class " << k++ << ": " << d["R_rows"] << " x " << d["L_cols"]
                << ", |H| = " << d["H_size"] << '\n';
      std::vector<std::vector<std::string>> grid;
      std::size_t                           width = 1;
      for (auto const& row : d["cells"]) {
        std::vector<std::string> line;
        for (auto const& cell : row) {
          auto text = labels_of(s, cell["members"].get<std::vector<Elem>>());
          if (cell["group"].get<bool>()) {
            text += " *";
          }
          width = std::max(width, text.size());
          line.push_back(text);
        }
        grid.push_back(line);
      }
      for (auto const& line : grid) {
        std::cout << "  |";
        for (auto const& cell : line) {
          std::cout << ' ' << cell << std::string(width - cell.size(), ' ') << " |";
        }
        std::cout << '\n';
      }
    }
    std::cout << "\n* marks group H-classes\n";
    return 0;
  }

  int run_congruences(Options const& o) {
    auto const s = load(o).semigroup;
    std::optional<std::size_t> cap;
    if (o.max != 0) {
      cap = o.max;
    }
    auto const lattice = enumerate_right_congruences(s, cap);
    if (o.as_json) {
      json list = json::array();
      for (auto const& rho : lattice.congruences) {
        list.push_back(congruence_json(rho));
      }
      std::cout << json{{"count", lattice.congruences.size()}, {"congruences", list}}.dump()
                << '\n';
      return 0;
    }
    std::cout << lattice.congruences.size() << " right congruences\n";
    for (auto const& rho : lattice.congruences) {
      std::cout << congruence_json(rho).dump() << '\n';
    }
    return 0;
  }

  int run_close(Options const& o) {
    auto const s   = load(o).semigroup;
    auto const rho = rc_generate(s, parse_pairs(o.pairs, s.size()), o.two_sided);
    std::cout << congruence_json(rho).dump() << '\n';
    return 0;
  }

  int run_witness(Options const& o) {
    auto const s = load(o).semigroup;
    check_element(o.from, s.size(), "--from");
    check_element(o.to, s.size(), "--to");
    auto const x   = parse_pairs(o.pairs, s.size());
    auto const seq = find_x_sequence(s, x, o.from, o.to);
    if (o.as_json) {
      json out{{"from", o.from}, {"to", o.to}, {"connected", seq.has_value()}};
      if (seq) {
        json steps = json::array();
        for (auto const& st : seq->steps) {
          steps.push_back({{"x", st.x}, {"y", st.y}, {"s", multiplier_json(st.s)}});
        }
        out["length"] = seq->length();
        out["steps"]  = steps;
      }
      std::cout << out.dump() << '\n';
      return 0;
    }
    if (!seq) {
      std::cout << "(" << o.from << ", " << o.to << ") is not a consequence of the pairs\n";
      return 0;
    }
    std::cout << seq->length() << "-step sequence from " << o.from << " to " << o.to
              << '\n';
    Elem current = o.from;
    for (auto const& st : seq->steps) {
      std::string const mult = st.s == kOne ? "1" : std::to_string(st.s);
      Elem const        next = s.mul1(st.y, st.s);
      std::cout << "  " << current << " = " << st.x << "*" << mult << ", " << st.y
                << "*" << mult << " = " << next << '\n';
      current = next;
    }
    return 0;
  }

  int run_minimize(Options const& o) {
    auto const s   = load(o).semigroup;
    auto const rho = relation_from(s, o.labels, o.pairs);
    if (!is_right_congruence(s, rho)) {
      throw Error(ErrorKind::precondition_failed, "the relation is not a right congruence");
    }
    auto const gens = minimal_generating_pairs(s, rho, o.exact_limit);
    if (o.as_json) {
      std::cout << json{{"congruence", congruence_json(rho)},
                        {"pairs", pairs_json(gens.pairs)},
                        {"optimal", gens.optimal}}
                       .dump()
                << '\n';
      return 0;
    }
    std::cout << gens.pairs.size() << " pairs (" << (gens.optimal ? "minimum" : "greedy")
              << "):";
    for (auto [a, b] : gens.pairs) {
      std::cout << " (" << a << "," << b << ")";
    }
    std::cout << '\n';
    return 0;
  }

  int run_diameter(Options const& o) {
    auto const s = load(o).semigroup;
    PairSet    x;
    if (o.pairs.empty()) {
      x = minimal_generating_pairs(s, RightCongruence::universal(s.size())).pairs;
    } else {
      x = parse_pairs(o.pairs, s.size());
    }
    auto const d = rc_diameter(s, x);
    if (auto const* k = std::get_if<std::size_t>(&d)) {
      if (o.as_json) {
        std::cout << json{{"pairs", pairs_json(x)}, {"diameter", *k}}.dump() << '\n';
      } else {
        std::cout << "diameter: " << *k << '\n';
      }
    } else {
      auto const index = std::get<Disconnected>(d).index;
      if (o.as_json) {
        std::cout << json{{"pairs", pairs_json(x)}, {"disconnected", true}, {"index", index}}
                         .dump()
                  << '\n';
      } else {
        std::cout << "disconnected: the pairs generate a right congruence of index "
                  << index << '\n';
      }
    }
    return 0;
  }

  int run_schutz(Options const& o) {
    auto const s = load(o).semigroup;
    check_element(o.element, s.size(), "--element");
    auto const sch = schutzenberger(s, o.element);
    if (o.as_json) {
      json stab = json::array();
      for (auto t : sch.stabilizer) {
        stab.push_back(multiplier_json(t));
      }
      json reps = json::array();
      for (auto t : sch.class_representatives) {
        reps.push_back(multiplier_json(t));
      }
      std::cout << json{{"h_class", sch.h_class},
                        {"stabilizer", stab},
                        {"sigma_class_of", sch.sigma_class_of},
                        {"class_representatives", reps},
                        {"order", sch.group.size()},
                        {"table", table_json(sch.group)}}
                       .dump()
                << '\n';
      return 0;
    }
    std::cout << "H-class: " << labels_of(s, sch.h_class) << '\n'
              << "stabilizer: " << labels_of(s, sch.stabilizer) << '\n'
              << "order: " << sch.group.size() << '\n'
              << "table:\n";
    print_table(std::cout, sch.group);
    return 0;
  }

  int run_decompose(Options const& o) {
    auto const s = load(o).semigroup;
    if (o.mode != "cr" && o.mode != "arch") {
      throw Error(ErrorKind::parse_error, "--mode must be cr or arch");
    }
    auto const dec = o.mode == "cr" ? cr_decomposition(s) : archimedean_decomposition(s);
    std::optional<CompletenessReport> complete;
    if (o.mode == "arch") {
      complete = completeness_check(s);
    }
    if (o.as_json) {
      json comps = json::array();
      for (std::size_t k = 0; k < dec.components.size(); ++k) {
        comps.push_back({{"members", dec.components[k]},
                         {"kind", std::string(to_string(dec.kinds[k]))}});
      }
      json out{{"mode", o.mode},
               {"components", comps},
               {"semilattice", table_json(dec.semilattice)}};
      if (complete) {
        out["complete"]    = complete->complete;
        out["idempotents"] = complete->idempotents;
      }
      std::cout << out.dump() << '\n';
      return 0;
    }
    for (std::size_t k = 0; k < dec.components.size(); ++k) {
      std::cout << "component " << k << " (" << to_string(dec.kinds[k])
                << "): " << labels_of(s, dec.components[k]) << '\n';
    }
    std::cout << "semilattice of components:\n";
    print_table(std::cout, dec.semilattice);
    if (complete) {
      std::cout << "complete: " << (complete->complete ? "yes" : "no") << '\n';
    }
    return 0;
  }

  int run_rees(Options const& o) {
    if (o.construct == o.to_coordinates) {
      throw Error(ErrorKind::parse_error,
                  "rees needs exactly one of --construct or --to-coordinates");
    }
    auto const in = load(o);
    if (o.construct) {
      if (!in.rees) {
        throw Error(ErrorKind::mismatched_input, "--construct needs rees input");
      }
      auto const built = rees_construct(*in.rees);
      if (built.irregular_warning) {
        std::cerr << "sgt: warning: P is not regular; the completely (0-)simple "
                     "check was skipped\n";
      }
      if (o.as_json) {
        std::cout << json{{"size", built.semigroup.size()},
                          {"labels", built.semigroup.labels()},
                          {"table", table_json(built.semigroup)},
                          {"regular", !built.irregular_warning}}
                         .dump()
                  << '\n';
      } else {
        write_cayley(std::cout, built.semigroup);
      }
      return 0;
    }
    auto const coords = rees_coordinates(in.semigroup);
    auto const& r     = coords.structure;
    if (o.as_json) {
      json p = json::array();
      for (std::size_t j = 0; j < r.j_size; ++j) {
        json row = json::array();
        for (std::size_t i = 0; i < r.i_size; ++i) {
          auto const entry = r.p(j, i);
          row.push_back(entry ? json(*entry) : json(nullptr));
        }
        p.push_back(row);
      }
      std::cout << json{{"group", table_json(r.group)},
                        {"i_size", r.i_size},
                        {"j_size", r.j_size},
                        {"zero", r.with_zero},
                        {"P", p},
                        {"iso", coords.iso}}
                       .dump()
                << '\n';
      return 0;
    }
    write_rees(std::cout, r);
    std::cout << "# element k of the construction is element iso[k] of the input\n"
              << "# iso:";
    for (auto x : coords.iso) {
      std::cout << ' ' << x;
    }
    std::cout << '\n';
    return 0;
  }

  int run_theta(Options const& o) {
    auto const in = load(o);
    if (!in.rees) {
      throw Error(ErrorKind::mismatched_input, "theta needs rees input");
    }
    auto const theta = theta_congruence(in.semigroup, *in.rees);
    if (o.as_json) {
      std::cout << json{{"patterns", theta.patterns},
                        {"distinct_patterns", theta.distinct_patterns},
                        {"congruence", congruence_json(theta.congruence)}}
                       .dump()
                << '\n';
      return 0;
    }
    std::cout << "distinct row patterns: " << theta.distinct_patterns << '\n'
              << congruence_json(theta.congruence).dump() << '\n';
    return 0;
  }

  int print_report(Options const& o, VerificationReport const& r) {
    if (o.as_json) {
      std::cout << report_json(r).dump() << '\n';
    } else {
      std::cout << "construction: " << r.construction << '\n'
                << "inputs: " << r.inputs_summary << '\n'
                << "pairs:";
      for (auto [a, b] : r.pairs) {
        std::cout << " (" << a << "," << b << ")";
      }
      std::cout << '\n';
      if (!r.generators.empty()) {
        std::cout << "generators:";
        for (auto x : r.generators) {
          std::cout << ' ' << x;
        }
        std::cout << '\n';
      }
      if (r.computed) {
        std::cout << "expected: " << congruence_json(*r.expected).dump() << '\n'
                  << "computed: " << congruence_json(*r.computed).dump() << '\n';
      }
      if (r.target_size != 0) {
        std::cout << "generated: " << r.generated_size << " of " << r.target_size
                  << '\n';
      }
      if (r.witness) {
        std::cout << "witness: (" << r.witness->first << "," << r.witness->second
                  << ")\n";
      }
      std::cout << "pass: " << (r.pass ? "yes" : "no") << '\n';
    }
    return r.pass ? 0 : kExitFailed;
  }

  int run_sweep_verb(Options const& o) {
    SweepOptions opts;
    opts.use_full_pairs = o.full_pairs;
    auto const result   = run_sweep(opts);
    if (o.as_json) {
      json rows = json::array(), failed = json::array();
      for (auto const& row : result.rows) {
        rows.push_back(
            {{"construction", row.construction}, {"runs", row.runs}, {"failures", row.failures}});
      }
      for (auto const& r : result.failed) {
        failed.push_back(report_json(r));
      }
      std::cout << json{{"rows", rows}, {"failed", failed}, {"pass", result.pass()}}.dump()
                << '\n';
    } else {
      std::cout << "construction      runs  failures\n";
      for (auto const& row : result.rows) {
        std::string name = row.construction;
        name.resize(14, ' ');
        std::string runs = std::to_string(row.runs);
        std::cout << name << std::string(8 - std::min<std::size_t>(8, runs.size()), ' ')
                  << runs << "  " << row.failures << '\n';
      }
      for (auto const& r : result.failed) {
        std::cout << "FAILED " << r.construction << " " << r.inputs_summary << '\n';
      }
      std::cout << (result.pass() ? "all constructions pass" : "some constructions failed")
                << '\n';
    }
    return result.pass() ? 0 : kExitFailed;
  }

  int run_verify(Options const& o) {
    if (o.sweep) {
      return run_sweep_verb(o);
    }
    VerifyOptions const vopts{o.full_pairs};
    auto const          s = load(o).semigroup;
    auto const&         c = o.construction;
    if (c == "fg") {
      auto gens = o.generators.empty() ? small_generating_set(s)
                                       : parse_elements(o.generators, "--generators");
      return print_report(o, verify_fg_gens(s, gens, relation_from(s, o.labels, o.pairs)));
    } else if (c == "lclass") {
      return print_report(o,
                          o.pairs.empty()
                              ? verify_lclass_gens(s, vopts)
                              : verify_lclass_gens(s, parse_pairs(o.pairs, s.size()), vopts));
    } else if (c == "schutz") {
      check_element(o.element, s.size(), "--element");
      return print_report(o, verify_schutz_gens(s, o.element, vopts));
    } else if (c == "extend") {
      auto const rho   = relation_from(s, o.labels, o.pairs);
      auto const sigma = relation_from(s, o.sigma_labels, o.sigma_pairs);
      return print_report(o, verify_extend_gens(s, rho, sigma, vopts));
    } else if (c == "diagonal") {
      return print_report(o, verify_diagonal(s));
    } else if (c == "dp" || c == "quotient") {
      if (o.second.empty()) {
        throw Error(ErrorKind::parse_error, c + " needs --second FILE");
      }
      auto const t = parse_file(o.second, InputFormat::automatic).semigroup;
      if (c == "dp") {
        auto const product = direct_product(s, t);
        return print_report(
            o, verify_dp_gens(s, t, relation_from(product, o.labels, o.pairs), vopts));
      }
      if (o.theta.empty()) {
        throw Error(ErrorKind::parse_error, "quotient needs --theta");
      }
      auto const theta = parse_elements(o.theta, "--theta");
      return print_report(
          o, verify_quotient_gens(s, theta, t, relation_from(t, o.labels, o.pairs), vopts));
    } else if (c == "ideal") {
      if (o.ideal.empty()) {
        throw Error(ErrorKind::parse_error, "ideal needs --ideal");
      }
      auto members = parse_elements(o.ideal, "--ideal");
      for (auto x : members) {
        check_element(x, s.size(), "--ideal element");
      }
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      if (!is_two_sided_ideal(s, members)) {
        throw Error(ErrorKind::not_an_ideal, "--ideal is not a two-sided ideal");
      }
      auto const local = restrict_to(s, members);
      return print_report(o,
                          verify_ideal_gens(s,
                                            members,
                                            o.identity,
                                            relation_from(local, o.labels, o.pairs),
                                            vopts));
    }
    throw Error(ErrorKind::parse_error,
                "--construction must be one of fg, lclass, dp, schutz, quotient, "
                "ideal, extend, diagonal");
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroups: right congruences, Green's relations and "
               "structure"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.as_json, "Machine-readable output");

  auto input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", o.input, "Input file, - for stdin");
    sub->add_option("--format", o.format, "auto, cayley, transformation or rees");
    sub->add_flag("--json", o.as_json, "Machine-readable output");
  };

  auto* info = app.add_subcommand("info", "Size, identity, zero and properties");
  input(info);
  auto* green = app.add_subcommand("green", "Green's relations and egg-box diagrams");
  input(green);
  auto* congruences = app.add_subcommand("congruences", "All right congruences");
  input(congruences);
  congruences->add_option("--max", o.max, "Fail when more than this many exist");
  auto* close = app.add_subcommand("close", "Right congruence generated by pairs");
  input(close);
  close->add_option("--pairs", o.pairs, "Pairs, e.g. \"0 1; 2 3\"")->required();
  close->add_flag("--two-sided", o.two_sided, "Generate a two-sided congruence");
  auto* witness = app.add_subcommand("witness", "Shortest X-sequence between two elements");
  input(witness);
  witness->add_option("--pairs", o.pairs, "Pairs X")->required();
  witness->add_option("--from", o.from, "Start element")->required();
  witness->add_option("--to", o.to, "End element")->required();
  auto* minimize = app.add_subcommand("minimize", "Small generating set of a right congruence");
  input(minimize);
  minimize->add_option("--labels", o.labels, "Class label of each element");
  minimize->add_option("--pairs", o.pairs, "Pairs generating the congruence");
  minimize->add_option("--exact-limit", o.exact_limit,
                       "Largest within-class pair count searched exhaustively");
  auto* diameter = app.add_subcommand("diameter", "Longest shortest X-sequence");
  input(diameter);
  diameter->add_option("--pairs", o.pairs,
                       "Pairs X; default a small generating set of the universal relation");
  auto* schutz = app.add_subcommand("schutz", "Schutzenberger group of an H-class");
  input(schutz);
  schutz->add_option("--element", o.element, "Element of the H-class")->required();
  auto* decompose = app.add_subcommand("decompose", "Semilattice decomposition");
  input(decompose);
  decompose->add_option("--mode", o.mode, "cr (completely regular) or arch (commutative)");
  auto* rees = app.add_subcommand("rees", "Rees matrix construction and coordinates");
  input(rees);
  rees->add_flag("--construct", o.construct, "Build the semigroup from rees input");
  rees->add_flag("--to-coordinates", o.to_coordinates,
                 "Rees coordinates of a completely (0-)simple semigroup");
  auto* theta = app.add_subcommand("theta", "Row-pattern right congruence of M0[G; I, J; P]");
  input(theta);
  auto* verify = app.add_subcommand("verify", "Check a generating-set construction");
  input(verify);
  verify->add_option("--construction", o.construction,
                     "fg, lclass, dp, schutz, quotient, ideal, extend or diagonal");
  verify->add_flag("--sweep", o.sweep, "Run every construction over the built-in library");
  verify->add_flag("--full-pairs", o.full_pairs,
                   "Use all within-class pairs instead of minimal generating pairs");
  verify->add_option("--labels", o.labels, "Class labels of rho");
  verify->add_option("--pairs", o.pairs, "Pairs generating rho (or X for lclass)");
  verify->add_option("--sigma-labels", o.sigma_labels, "Class labels of sigma (extend)");
  verify->add_option("--sigma-pairs", o.sigma_pairs, "Pairs generating sigma (extend)");
  verify->add_option("--generators", o.generators, "Generating set of S (fg)");
  verify->add_option("--element", o.element, "Element (schutz)");
  verify->add_option("--second", o.second, "Second semigroup: N (dp) or T (quotient)");
  verify->add_option("--theta", o.theta, "Image of each element (quotient)");
  verify->add_option("--ideal", o.ideal, "Ideal members (ideal)");
  verify->add_option("--identity", o.identity, "Identity of the ideal (ideal)");

  std::map<CLI::App*, int (*)(Options const&)> const dispatch{
      {info, run_info},
      {green, run_green},
      {congruences, run_congruences},
      {close, run_close},
      {witness, run_witness},
      {minimize, run_minimize},
      {diameter, run_diameter},
      {schutz, run_schutz},
      {decompose, run_decompose},
      {rees, run_rees},
      {theta, run_theta},
      {verify, run_verify}};

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    std::cerr << "sgt: " << e.what() << '\n';
    return kExitError;
  }

  try {
    for (auto const& [sub, run] : dispatch) {
      if (sub->parsed()) {
        return run(o);
      }
    }
  } catch (std::exception const& e) {
    std::cerr << "sgt: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
