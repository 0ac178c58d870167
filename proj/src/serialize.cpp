#include "ordsg/serialize.hpp"

#include <sstream>  // for ostringstream

namespace ordsg {

  Json parse_json(std::string_view text) {
    try {
      return Json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      // nlohmann reports the 1-based byte of the offending character.
      std::size_t const pos = e.byte == 0 ? 0 : e.byte - 1;
      throw ParseError("malformed JSON", pos);
    }
  }

  Json rational_to_json(Rational const& x) {
    return x.to_string();
  }

  Rational rational_from_json(Json const& j) {
    if (j.is_number_integer()) {
      return Rational(j.get<std::int64_t>());
    }
    if (j.is_string()) {
      return Rational::parse(j.get<std::string>());
    }
    throw DomainError("expected a rational as a string or an integer, got "
                      + j.dump());
  }

  Json matrix_to_json(Matrix const& m) {
    Json out = Json::array();
    for (auto const& row : m.rows()) {
      Json r = Json::array();
      for (auto const& x : row) {
        r.push_back(rational_to_json(x));
      }
      out.push_back(std::move(r));
    }
    return out;
  }

  Matrix matrix_from_json(Json const& j) {
    if (!j.is_array() || j.empty()) {
      throw DomainError("expected a non-empty array of rows, got " + j.dump());
    }
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_array() || j[i].size() != j.size()) {
        throw DomainError("matrix row " + std::to_string(i + 1) + " must have "
                          + std::to_string(j.size()) + " entries");
      }
      std::vector<Rational> row;
      for (auto const& x : j[i]) {
        row.push_back(rational_from_json(x));
      }
      rows.push_back(std::move(row));
    }
    return Matrix(std::move(rows));
  }

  Json element_to_json(FreeMonoid const& inst, Word const& x) {
    return inst.render(x);
  }

  Word element_from_json(FreeMonoid const& inst, Json const& j) {
    if (!j.is_string()) {
      throw DomainError("expected a word as a string, got " + j.dump());
    }
    return inst.parse(j.get<std::string>());
  }

  Json element_to_json(TriangularSemigroup const&, TriMatrix const& x) {
    return matrix_to_json(x.entries());
  }

  TriMatrix element_from_json(TriangularSemigroup const& inst, Json const& j) {
    Matrix m = matrix_from_json(j.is_string() ? parse_json(j.get<std::string>())
                                              : j);
    if (m.dim() != inst.dim()) {
      throw DomainError("expected a " + std::to_string(inst.dim()) + "x"
                        + std::to_string(inst.dim()) + " matrix, got "
                        + std::to_string(m.dim()) + "x"
                        + std::to_string(m.dim()));
    }
    return inst.make(m);
  }

  Json element_to_json(NatAdd const&, Rational const& x) {
    return rational_to_json(x);
  }

  Rational element_from_json(NatAdd const& inst, Json const& j) {
    auto x = rational_from_json(j);
    inst.validate(x);
    return x;
  }

  Json element_to_json(NonNegRationals const&, Rational const& x) {
    return rational_to_json(x);
  }

  Rational element_from_json(NonNegRationals const& inst, Json const& j) {
    auto x = rational_from_json(j);
    inst.validate(x);
    return x;
  }

  Json element_to_json(LeftZero const& inst, LeftZeroElement const& x) {
    return inst.render(x);
  }

  LeftZeroElement element_from_json(LeftZero const& inst, Json const& j) {
    if (!j.is_string()) {
      throw DomainError("expected a carrier name, got " + j.dump());
    }
    return inst.parse(j.get<std::string>());
  }

  Json bound_to_json(BoundCheck const& b) {
    return {{"bound", b.bound}, {"actual", b.actual}, {"holds", b.holds}};
  }

  Json pagano_to_json(PaganoWitness const& w) {
    return {{"n", w.n},
            {"alpha", matrix_to_json(w.alpha)},
            {"beta", matrix_to_json(w.beta)},
            {"alpha^2", matrix_to_json(w.alpha_squared)},
            {"alpha*beta", matrix_to_json(w.alpha_beta)},
            {"alpha^2 = alpha*beta", w.alpha_squared.rows() == w.alpha_beta.rows()},
            {"alpha != beta", w.alpha.rows() != w.beta.rows()}};
  }

  namespace {
    bool is_scalar_array(Json const& j) {
      for (auto const& x : j) {
        if (x.is_structured() && !x.empty()) {
          return false;
        }
      }
      return true;
    }

    void write_text(std::ostringstream& os, Json const& j, std::size_t indent) {
      std::string const pad(indent, ' ');
      if (j.is_object()) {
        for (auto const& [k, v] : j.items()) {
          if (v.is_structured() && !v.empty()
              && !(v.is_array() && is_scalar_array(v))) {
            os << pad << k << ":\n";
            write_text(os, v, indent + 2);
          } else {
            os << pad << k << ": " << (v.is_string() ? v.get<std::string>()
                                                     : v.dump())
               << "\n";
          }
        }
      } else if (j.is_array()) {
        for (auto const& v : j) {
          if (v.is_object()) {
            os << pad << "-\n";
            write_text(os, v, indent + 2);
          } else {
            os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump())
               << "\n";
          }
        }
      } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
      }
    }
  }  // namespace

  std::string json_to_text(Json const& j) {
    std::ostringstream os;
    write_text(os, j, 0);
    return os.str();
  }

}  // namespace ordsg
