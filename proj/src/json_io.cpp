#include "tlfiber/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace tlfiber {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Scalar to_field(const Scalar& s, Field f) {
  if (s.field() == f) return s;
  return s.embed(f);
}

std::string generator_key(Generator g) {
  return "(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
}

Generator parse_generator(const std::string& text, std::size_t& pos) {
  unsigned long i = 0, j = 0;
  int used = 0;
  if (std::sscanf(text.c_str() + pos, " (%lu , %lu )%n", &i, &j, &used) != 2 || used == 0)
    throw ParseError("bad generator key '" + text + "'");
  pos += static_cast<std::size_t>(used);
  return {i, j};
}

Json rows_to_json(const Matrix& m) {
  Json data = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    data.push_back(std::move(row));
  }
  return data;
}

Matrix rows_from_json(const Json& data, Field f) {
  if (!data.is_array()) throw ParseError("matrix data must be an array of rows");
  const std::size_t rows = data.size();
  const std::size_t cols = rows ? data[0].size() : 0;
  Matrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!data[r].is_array() || data[r].size() != cols) throw ParseError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = to_field(scalar_from_json(data[r][c], f), f);
  }
  return m;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  switch (s.field()) {
    case Field::Rational:
      return rational_to_string(s.as_rational());
    case Field::ComplexRational: {
      const auto& z = s.as_complex_rational();
      return Json{{"re", rational_to_string(z.re)}, {"im", rational_to_string(z.im)}};
    }
    case Field::Complex: {
      const Complex z = s.to_complex();
      return Json::array({z.real(), z.imag()});
    }
  }
  return nullptr;
}

Scalar scalar_from_json(const Json& j, Field hint) {
  return guarded("scalar", [&] {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), hint);
    if (j.is_object()) {
      auto part = [&](const char* key) {
        if (!j.contains(key)) return Rational(0);
        const Json& v = j.at(key);
        return v.is_string() ? parse_rational(v.get<std::string>()) : parse_rational(v.dump());
      };
      Scalar z(ComplexRational{part("re"), part("im")});
      return hint == Field::Complex ? z.embed(Field::Complex) : z;
    }
    if (j.is_array()) {
      if (j.size() != 2) throw ParseError("approximate complex must be [re, im]");
      return Scalar(Complex(j[0].get<double>(), j[1].get<double>()));
    }
    if (j.is_number()) {
      if (is_exact(hint)) return Scalar::parse(j.dump(), hint);
      return Scalar(Complex(j.get<double>(), 0.0));
    }
    throw ParseError("cannot read a scalar from " + j.dump());
  });
}

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["scalar"] = std::string(field_name(m.field()));
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = rows_to_json(m);
  return j;
}

Matrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const Field f = j.contains("scalar") ? parse_field(j.at("scalar").get<std::string>())
                                         : Field::Rational;
    Matrix m = rows_from_json(j.at("data"), f);
    if (j.contains("rows") && j.at("rows").get<std::size_t>() != m.rows())
      throw ParseError("row count does not match data");
    if (j.contains("cols") && m.rows() && j.at("cols").get<std::size_t>() != m.cols())
      throw ParseError("column count does not match data");
    return m;
  });
}

Json diagram_to_json(const PlanarDiagram& d) {
  Json pairs = Json::array();
  for (const auto& [a, b] : d.pairs()) pairs.push_back({a, b});
  return Json{{"source", d.source()}, {"target", d.target()}, {"pairs", pairs}, {"loops", d.loops()}};
}

PlanarDiagram diagram_from_json(const Json& j) {
  return guarded("diagram", [&] {
    std::vector<PlanarDiagram::Pair> pairs;
    for (const auto& p : j.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw ParseError("pairs must be [a, b]");
      pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    return PlanarDiagram(j.at("source").get<std::size_t>(), j.at("target").get<std::size_t>(),
                         std::move(pairs), j.value("loops", std::size_t{0}));
  });
}

Json word_to_json(const TLWord& w) {
  Json letters = Json::array();
  for (const auto& l : w.letters)
    letters.push_back({{"op", l.op == LetterOp::Cap ? "cap" : "cup"}, {"i", l.index}});
  return Json{{"source", w.source}, {"letters", letters}};
}

TLWord word_from_json(const Json& j) {
  return guarded("word", [&] {
    TLWord w{j.at("source").get<std::size_t>(), {}};
    for (const auto& l : j.at("letters")) {
      const auto op = l.at("op").get<std::string>();
      if (op != "cap" && op != "cup") throw ParseError("letter op must be cap or cup");
      w.letters.push_back({op == "cap" ? LetterOp::Cap : LetterOp::Cup, l.at("i").get<std::size_t>()});
    }
    w.target();
    return w;
  });
}

Json tensor_map_to_json(const TensorMap& t) {
  return Json{{"in", t.in_legs},
              {"out", t.out_legs},
              {"N", t.N},
              {"scalar", std::string(field_name(t.entries.field()))},
              {"data", rows_to_json(t.entries)}};
}

Json multiplicity_to_json(const MultiplicityFunction& mu) {
  Json entries = Json::array();
  for (const auto& e : mu.entries())
    entries.push_back({{"eigenvalue", scalar_to_json(e.eigenvalue)}, {"sizes", e.sizes}});
  return Json{{"scalar", std::string(field_name(mu.field()))}, {"entries", entries}};
}

MultiplicityFunction multiplicity_from_json(const Json& j) {
  return guarded("multiplicity function", [&] {
    Field f = Field::Rational;
    if (j.contains("scalar")) {
      f = parse_field(j.at("scalar").get<std::string>());
    } else {
      for (const auto& e : j.at("entries")) {
        const Json& z = e.at("eigenvalue");
        if (z.is_object() && f == Field::Rational) f = Field::ComplexRational;
        if (z.is_array()) f = Field::Complex;
      }
    }
    std::vector<JordanData> data;
    for (const auto& e : j.at("entries"))
      data.push_back({to_field(scalar_from_json(e.at("eigenvalue"), f), f),
                      e.at("sizes").get<std::vector<std::size_t>>()});
    return MultiplicityFunction(std::move(data));
  });
}

Json presentation_to_json(const HopfPresentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relations) {
    Json lin = Json::object(), quad = Json::object();
    for (const auto& [g, c] : r.linear()) lin[generator_key(g)] = scalar_to_json(c);
    for (const auto& [m, c] : r.quadratic())
      quad[generator_key(m.first) + generator_key(m.second)] = scalar_to_json(c);
    rels.push_back({{"const", scalar_to_json(r.constant())}, {"lin", lin}, {"quad", quad}});
  }
  Json j{{"n", p.N},
         {"scalar", std::string(field_name(p.field))},
         {"relations", rels},
         {"coproduct", "Delta(a_ij) = sum_k a_ik (x) a_kj"},
         {"counit", "eps(a_ij) = delta_ij"},
         {"antipode", rows_to_json(p.antipode)}};
  if (p.star)
    j["star"] = Json{{"T", rows_to_json(p.star->T)}, {"q", scalar_to_json(p.star->q)}};
  return j;
}

HopfPresentation presentation_from_json(const Json& j) {
  return guarded("presentation", [&] {
    HopfPresentation p;
    p.N = j.at("n").get<std::size_t>();
    p.field = j.contains("scalar") ? parse_field(j.at("scalar").get<std::string>()) : Field::Rational;
    for (const auto& r : j.at("relations")) {
      NCQuadratic q(p.N, p.field);
      if (r.contains("const")) q.add_constant(to_field(scalar_from_json(r.at("const"), p.field), p.field));
      if (r.contains("lin"))
        for (const auto& [key, value] : r.at("lin").items()) {
          std::size_t pos = 0;
          const Generator g = parse_generator(key, pos);
          q.add_linear(g, to_field(scalar_from_json(value, p.field), p.field));
        }
      if (r.contains("quad"))
        for (const auto& [key, value] : r.at("quad").items()) {
          std::size_t pos = 0;
          const Generator g = parse_generator(key, pos);
          const Generator h = parse_generator(key, pos);
          q.add_quadratic(g, h, to_field(scalar_from_json(value, p.field), p.field));
        }
      p.relations.push_back(std::move(q));
    }
    if (j.contains("antipode")) p.antipode = rows_from_json(j.at("antipode"), p.field);
    if (j.contains("star")) {
      const Json& s = j.at("star");
      StarStructure star;
      star.T = rows_from_json(s.at("T"), p.field);
      star.matrix = conjugation_substitution(star.T);
      if (s.contains("q")) star.q = to_field(scalar_from_json(s.at("q"), p.field), p.field);
      p.star = std::move(star);
    }
    return p;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace tlfiber
