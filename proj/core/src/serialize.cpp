#include "torelli/serialize.hpp"

#include "torelli/error.hpp"

namespace torelli {

  json to_json(Integer const& x) {
    if (x.fits_slong_p()) {
      return x.get_si();
    }
    return x.get_str();
  }

  Integer integer_from_json(json const& j) {
    if (j.is_number_integer()) {
      return Integer(j.get<long>());
    }
    if (j.is_string()) {
      Integer x;
      if (x.set_str(j.get<std::string>(), 10) == 0) {
        return x;
      }
    }
    throw DomainError("expected an integer, got " + j.dump());
  }

  json to_json(IntVector const& v) {
    json out = json::array();
    for (auto const& x : v) {
      out.push_back(to_json(x));
    }
    return out;
  }

  json to_json(IntMatrix const& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out.push_back(to_json(m.row(r)));
    }
    return out;
  }

  namespace {
    void append_coeffs(json& out, ExtVector const& v, json const& prefix) {
      int const m = static_cast<int>(v.rank());
      for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
          if (v.at(i, j) != 0) {
            json e = prefix;
            e.push_back(i);
            e.push_back(j);
            e.push_back(to_json(v.at(i, j)));
            out.push_back(std::move(e));
          }
        }
      }
    }
  }  // namespace

  json to_json(ExtVector const& v) {
    json coeffs = json::array();
    append_coeffs(coeffs, v, json::array());
    return {{"rank", v.rank()}, {"coeffs", coeffs}};
  }

  json to_json(HomTable const& t) {
    json coeffs = json::array();
    for (int k = 1; k <= static_cast<int>(t.rank()); ++k) {
      append_coeffs(coeffs, t.column(k), json::array({k}));
    }
    return {{"rank", t.rank()}, {"coeffs", coeffs}};
  }

  json to_json(PartitionConfig const& c) {
    return {{"n", c.n}, {"b", c.b}, {"partition", c.partition}};
  }

  PartitionConfig config_from_json(json const& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("b")) {
      throw DomainError("config needs fields n and b");
    }
    PartitionConfig c;
    try {
      c.n = j.at("n").get<int>();
      c.b = j.at("b").get<int>();
      if (j.contains("partition")) {
        c.partition = j.at("partition").get<std::vector<std::vector<int>>>();
      }
    } catch (json::exception const& e) {
      throw DomainError(std::string("malformed config: ") + e.what());
    }
    validate(c);
    return c;
  }

  PartitionConfig parse_config(std::string_view text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      throw ParseError(std::string("config JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
    return config_from_json(j);
  }

  json to_json(CappedBasis const& b) {
    json layout = json::array();
    for (auto const& role : b.layout()) {
      layout.push_back(to_string(role));
    }
    return {{"rank", b.rank()}, {"layout", layout}};
  }

  json to_json(Factorization const& f) {
    json out = json::array();
    for (auto const& [factor, e] : f.terms()) {
      out.push_back({{"factor", to_string(factor)}, {"exp", e}});
    }
    return out;
  }

  json to_json(GroupMap const& f) {
    json out = json::array();
    for (auto const& w : f.images()) {
      out.push_back(to_string(w));
    }
    return out;
  }

  std::vector<IntVector> vectors_from_json(json const& j) {
    if (!j.is_array()) {
      throw DomainError("expected an array of integer vectors");
    }
    std::vector<IntVector> out;
    for (auto const& row : j) {
      if (!row.is_array()) {
        throw DomainError("expected an array of integer vectors");
      }
      IntVector v;
      for (auto const& x : row) {
        v.push_back(integer_from_json(x));
      }
      if (!out.empty() && v.size() != out.front().size()) {
        throw DomainError("vectors have different lengths");
      }
      out.push_back(std::move(v));
    }
    return out;
  }

}  // namespace torelli
