#include "tlfiber/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "tlfiber/json_io.hpp"
#include "tlfiber/unitary.hpp"

namespace tlfiber::cli {

namespace {

struct Options {
  std::string mode = "exact";
  Tolerance tol;
  std::string out_path;

  bool numeric() const { return mode == "numeric"; }
  Field field() const { return numeric() ? Field::Complex : Field::Rational; }
  Tolerance effective() const { return numeric() ? tol : Tolerance::exact(); }
};

std::vector<std::string> split(const std::string& list) {
  std::vector<std::string> parts;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

Matrix load_form(const std::string& path, const Options& o) {
  Matrix m = matrix_from_json(read_json_file(path));
  if (o.numeric() && m.field() != Field::Complex) m = m.embed(Field::Complex);
  return m;
}

Scalar parse_scalar(const std::string& text, const Options& o) {
  return Scalar::parse(text, o.field());
}

// Each handler returns the exit code and fills `result`.
using Handler = std::function<int(Json& result)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fiber functors on Temperley-Lieb categories", "tlfiber"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--mode", o.mode, "exact or numeric")
      ->check(CLI::IsMember({"exact", "numeric"}));
  app.add_option("--rank-threshold", o.tol.rank_threshold, "relative singular value cutoff")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--cluster-radius", o.tol.cluster_radius, "eigenvalue grouping distance")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out", o.out_path, "write the JSON result here instead of stdout");

  Handler handler;
  std::string form, a, b, mu_path, diagram, word, phi, d_text, domain, values;
  std::size_t n = 0;
  int sign = 0;
  std::string star_h;
  int star_sign = 0;

  auto* classify = app.add_subcommand("classify", "Theta, Jordan data, d and admissibility of a form");
  classify->add_option("--form", form)->required();
  classify->callback([&] {
    handler = [&](Json& r) {
      const Matrix e = load_form(form, o);
      const Tolerance tol = o.effective();
      const Matrix th = theta(e, tol);
      const auto mu = jordan_multiplicities(th, tol);
      r["N"] = e.rows();
      r["scalar"] = std::string(field_name(e.field()));
      r["d"] = scalar_to_json(dimension_of(e, tol));
      r["theta"] = matrix_to_json(th);
      r["multiplicity"] = multiplicity_to_json(mu);
      r["admissible"] = admissible(mu, is_exact(mu.field()) ? 0.0 : tol.cluster_radius);
      return kOk;
    };
  });

  auto* equiv = app.add_subcommand("equiv", "decide whether two forms lie in one orbit");
  equiv->add_option("--a", a)->required();
  equiv->add_option("--b", b)->required();
  equiv->callback([&] {
    handler = [&](Json& r) {
      const bool same = equivalent_forms(load_form(a, o), load_form(b, o), o.effective());
      r["equivalent"] = same;
      return same ? kOk : kFalse;
    };
  });

  auto* canonical = app.add_subcommand("canonical", "canonical form for a multiplicity function");
  canonical->add_option("--mu", mu_path)->required();
  canonical->callback([&] {
    handler = [&](Json& r) {
      r = matrix_to_json(canonical_form(multiplicity_from_json(read_json_file(mu_path)), o.effective()));
      return kOk;
    };
  });

  auto* enumerate = app.add_subcommand("enumerate", "all classes with given d and N over a finite domain");
  enumerate->add_option("--d", d_text)->required();
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--domain", domain, "comma separated eigenvalues")->required();
  enumerate->callback([&] {
    handler = [&](Json& r) {
      std::vector<Scalar> dom;
      for (const auto& z : split(domain)) dom.push_back(parse_scalar(z, o));
      Json list = Json::array();
      for (const auto& mu : enumerate_classes(parse_scalar(d_text, o), n, dom, o.effective()))
        list.push_back(multiplicity_to_json(mu));
      r["count"] = list.size();
      r["classes"] = list;
      return kOk;
    };
  });

  auto* eval = app.add_subcommand("eval-diagram", "evaluate a diagram or word as a tensor map");
  eval->add_option("--form", form)->required();
  auto* diagram_opt = eval->add_option("--diagram", diagram);
  auto* word_opt = eval->add_option("--word", word);
  diagram_opt->excludes(word_opt);
  eval->callback([&] {
    handler = [&](Json& r) {
      if (diagram.empty() && word.empty()) throw ParseError("eval-diagram needs --diagram or --word");
      const BilinearForm bf(load_form(form, o), o.effective());
      const PlanarDiagram dg = diagram.empty() ? word_to_diagram(word_from_json(read_json_file(word)))
                                               : diagram_from_json(read_json_file(diagram));
      r = tensor_map_to_json(evaluate(bf, dg));
      return kOk;
    };
  });

  auto* tl_check = app.add_subcommand("tl-check", "verify the Temperley-Lieb relations in End(n)");
  tl_check->add_option("--n", n)->required()->check(CLI::Range(2, 10));
  tl_check->add_option("--form", form, "also check the evaluated relations");
  tl_check->callback([&] {
    handler = [&](Json& r) {
      std::size_t checked = 0, failed = 0;
      std::optional<BilinearForm> bf;
      if (!form.empty()) bf.emplace(load_form(form, o), o.effective());
      auto eval_ok = [&](const PlanarDiagram& lhs, const PlanarDiagram& rhs) {
        if (!bf) return true;
        const Matrix x = evaluate(*bf, lhs).entries, y = evaluate(*bf, rhs).entries;
        return is_exact(x.field()) ? x == y : x.max_abs_diff(y) <= 1e-9 * std::max(1.0, y.max_abs());
      };
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) {
          const auto hi = generator_h(n, i), hj = generator_h(n, j);
          PlanarDiagram lhs, rhs;
          const std::size_t gap = i > j ? i - j : j - i;
          if (gap == 0) {
            lhs = compose(hi, hi);
            rhs = hi.with_loops(1);
          } else if (gap == 1) {
            lhs = compose(hi, compose(hj, hi));
            rhs = hi;
          } else {
            lhs = compose(hi, hj);
            rhs = compose(hj, hi);
          }
          ++checked;
          if (!(lhs == rhs) || !eval_ok(lhs, rhs)) ++failed;
        }
      r["n"] = n;
      r["checked"] = checked;
      r["failed"] = failed;
      r["evaluated"] = bf.has_value();
      return failed == 0 ? kOk : kFalse;
    };
  });

  auto* u_classify = app.add_subcommand("unitary-classify", "spectral invariant of Phi in Gamma_d");
  u_classify->add_option("--phi", phi)->required();
  u_classify->add_option("--d", d_text)->required();
  u_classify->callback([&] {
    handler = [&](Json& r) {
      const Matrix p = matrix_from_json(read_json_file(phi));
      const Scalar d = Scalar::parse(d_text, Field::Rational);
      const auto inv = spectral_invariant(p, d);
      r["values"] = inv.values;
      r["sign"] = inv.sign;
      r["m"] = inv.m;
      r["abs_d"] = inv.abs_dimension();
      return kOk;
    };
  });

  auto* u_canonical = app.add_subcommand("unitary-canonical", "canonical Phi for an eigenvalue list");
  u_canonical->add_option("--values", values, "comma separated h_j")->required();
  u_canonical->add_option("--sign", sign)->required()->check(CLI::IsMember({-1, 1}));
  u_canonical->callback([&] {
    handler = [&](Json& r) {
      std::vector<double> hs;
      for (const auto& v : split(values)) hs.push_back(Scalar::parse(v, Field::Rational).real_double());
      r = matrix_to_json(canonical_phi(hs, sign));
      return kOk;
    };
  });

  auto* u_equiv = app.add_subcommand("unitary-equiv", "decide unitary equivalence in Gamma_d");
  u_equiv->add_option("--a", a)->required();
  u_equiv->add_option("--b", b)->required();
  u_equiv->add_option("--d", d_text)->required();
  u_equiv->callback([&] {
    handler = [&](Json& r) {
      const bool same = unitarily_equivalent(matrix_from_json(read_json_file(a)),
                                             matrix_from_json(read_json_file(b)),
                                             Scalar::parse(d_text, Field::Rational), o.tol);
      r["equivalent"] = same;
      return same ? kOk : kFalse;
    };
  });

  auto* h_present = app.add_subcommand("hopf-present", "relations, coproduct, counit and antipode of a form");
  h_present->add_option("--form", form)->required();
  h_present->add_option("--star-h", star_h, "attach the star structure with this h");
  h_present->add_option("--star-sign", star_sign)->check(CLI::IsMember({-1, 1}));
  h_present->callback([&] {
    handler = [&](Json& r) {
      HopfPresentation p = present(BilinearForm(load_form(form, o), o.effective()));
      if (!star_h.empty()) {
        if (star_sign == 0) throw ParseError("--star-h needs --star-sign");
        p.star = star_structure(Scalar::parse(star_h, p.field), star_sign);
      }
      r = presentation_to_json(p);
      return kOk;
    };
  });

  auto* h_compare = app.add_subcommand("hopf-compare", "compare relation spans of two presentations");
  h_compare->add_option("--a", a)->required();
  h_compare->add_option("--b", b)->required();
  h_compare->callback([&] {
    handler = [&](Json& r) {
      const auto pa = presentation_from_json(read_json_file(a));
      const auto pb = presentation_from_json(read_json_file(b));
      const Tolerance tol = o.effective();
      const auto sa = relation_span(pa.relations, tol), sb = relation_span(pb.relations, tol);
      const bool same = sa.equals(sb);
      r["rank_a"] = sa.rank();
      r["rank_b"] = sb.rank();
      r["equal"] = same;
      return same ? kOk : kFalse;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    Json result = Json::object();
    const int code = handler(result);
    const std::string text = result.dump(2) + "\n";
    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out_path);
      if (!f) throw ParseError("cannot write " + o.out_path);
      f << text;
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_math_error(e.kind()) ? kMathError : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace tlfiber::cli
