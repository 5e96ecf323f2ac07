#include "interlace/instance_io.hpp"

#include "interlace/error.hpp"

#include <cstdio>

namespace interlace {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  fail(ErrorCode::Parse, path + ": " + what);
}

Rational read_rational(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      schema_error(path, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  schema_error(path, "expected a rational string \"p/q\"");
}

ComplexRational read_complex(const json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2) schema_error(path, "complex entry must be [re, im]");
    return {read_rational(j[0], path + "[0]"), read_rational(j[1], path + "[1]")};
  }
  return ComplexRational(read_rational(j, path));
}

VectorC read_vector(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected a list of [re, im] entries");
  std::vector<ComplexRational> entries;
  for (std::size_t k = 0; k < j.size(); ++k) entries.push_back(read_complex(j[k], path + "[" + std::to_string(k) + "]"));
  return VectorC(std::move(entries));
}

HermitianMatrix read_matrix(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected a list of rows");
  const std::size_t n = j.size();
  Matrix<ComplexRational> m(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string row_path = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != n) schema_error(row_path, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = read_complex(j[r][c], row_path + "[" + std::to_string(c) + "]");
  }
  try {
    return HermitianMatrix::from_matrix(std::move(m));
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
}

template <class T, class Reader>
std::vector<T> read_list(const json& j, const std::string& path, Reader reader) {
  if (!j.is_array()) schema_error(path, "expected a list");
  std::vector<T> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(reader(j[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

RandomVectorSpec read_spec(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("support")) schema_error(path, "expected {\"support\": [...]}");
  RandomVectorSpec spec;
  const json& support = j.at("support");
  if (!support.is_array()) schema_error(path + ".support", "expected a list");
  for (std::size_t s = 0; s < support.size(); ++s) {
    const std::string sp = path + ".support[" + std::to_string(s) + "]";
    const json& point = support[s];
    if (!point.is_object() || !point.contains("prob")) schema_error(sp, "expected {\"prob\": ..., \"vector\": ...}");
    Rational prob = read_rational(point.at("prob"), sp + ".prob");
    if (point.contains("vector")) {
      spec.support.push_back(SupportPoint::from_vector(std::move(prob), read_vector(point.at("vector"), sp + ".vector")));
    } else if (point.contains("outer")) {
      HermitianMatrix outer = read_matrix(point.at("outer"), sp + ".outer");
      try {
        spec.support.push_back(SupportPoint::from_outer(std::move(prob), std::move(outer)));
      } catch (const Error& e) {
        schema_error(sp + ".outer", e.what());
      }
    } else {
      schema_error(sp, "needs \"vector\" or \"outer\"");
    }
  }
  return spec;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

bool operator==(const InstanceFile& a, const InstanceFile& b) {
  if (a.dim != b.dim || a.matrices != b.matrices || a.vectors != b.vectors || a.outer_products != b.outer_products)
    return false;
  if (a.specs.has_value() != b.specs.has_value()) return false;
  if (!a.specs) return true;
  if (a.specs->size() != b.specs->size()) return false;
  for (std::size_t i = 0; i < a.specs->size(); ++i) {
    const auto& sa = (*a.specs)[i].support;
    const auto& sb = (*b.specs)[i].support;
    if (sa.size() != sb.size()) return false;
    for (std::size_t s = 0; s < sa.size(); ++s)
      if (sa[s].prob != sb[s].prob || sa[s].outer != sb[s].outer || sa[s].vector != sb[s].vector) return false;
  }
  return true;
}

InstanceFile parse_instance_file(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, "malformed JSON at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!j.is_object()) schema_error("$", "expected an object");
  InstanceFile f;
  if (!j.contains("dim") || !j.at("dim").is_number_unsigned() || j.at("dim").get<std::size_t>() == 0)
    schema_error("$.dim", "expected a positive integer");
  f.dim = j.at("dim").get<std::size_t>();
  if (j.contains("specs")) f.specs = read_list<RandomVectorSpec>(j.at("specs"), "$.specs", read_spec);
  if (j.contains("matrices")) f.matrices = read_list<HermitianMatrix>(j.at("matrices"), "$.matrices", read_matrix);
  if (j.contains("vectors")) f.vectors = read_list<VectorC>(j.at("vectors"), "$.vectors", read_vector);
  if (j.contains("outer_products"))
    f.outer_products = read_list<HermitianMatrix>(j.at("outer_products"), "$.outer_products", read_matrix);

  auto check_dim = [&](std::size_t got, const std::string& path) {
    if (got != f.dim) schema_error(path, "has dimension " + std::to_string(got) + ", expected " + std::to_string(f.dim));
  };
  if (f.matrices)
    for (std::size_t k = 0; k < f.matrices->size(); ++k) check_dim((*f.matrices)[k].dim(), "$.matrices[" + std::to_string(k) + "]");
  if (f.vectors)
    for (std::size_t k = 0; k < f.vectors->size(); ++k) check_dim((*f.vectors)[k].dim(), "$.vectors[" + std::to_string(k) + "]");
  if (f.outer_products)
    for (std::size_t k = 0; k < f.outer_products->size(); ++k)
      check_dim((*f.outer_products)[k].dim(), "$.outer_products[" + std::to_string(k) + "]");
  if (f.specs)
    for (std::size_t i = 0; i < f.specs->size(); ++i)
      for (std::size_t s = 0; s < (*f.specs)[i].support.size(); ++s)
        check_dim((*f.specs)[i].support[s].outer.dim(),
                  "$.specs[" + std::to_string(i) + "].support[" + std::to_string(s) + "]");
  return f;
}

ordered_json to_json(const Rational& q) { return to_string(q); }

ordered_json to_json(const ComplexRational& z) { return ordered_json::array({to_string(z.re), to_string(z.im)}); }

ordered_json to_json(const VectorC& v) {
  ordered_json out = ordered_json::array();
  for (const auto& e : v.entries()) out.push_back(to_json(e));
  return out;
}

ordered_json to_json(const HermitianMatrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json to_json(const RootBracket& b) {
  ordered_json out;
  out["lo"] = to_string(b.lo);
  out["hi"] = to_string(b.hi);
  out["approx"] = approx_label(b.midpoint());
  return out;
}

ordered_json to_json(const UniPoly& p) {
  ordered_json out = ordered_json::array();
  for (const auto& c : coefficient_strings(p)) out.push_back(c);
  return out;
}

std::string serialize_instance_file(const InstanceFile& file) {
  ordered_json j;
  j["dim"] = file.dim;
  if (file.specs) {
    ordered_json specs = ordered_json::array();
    for (const auto& spec : *file.specs) {
      ordered_json support = ordered_json::array();
      for (const auto& p : spec.support) {
        ordered_json point;
        point["prob"] = to_string(p.prob);
        if (p.vector)
          point["vector"] = to_json(*p.vector);
        else
          point["outer"] = to_json(p.outer);
        support.push_back(std::move(point));
      }
      specs.push_back({{"support", std::move(support)}});
    }
    j["specs"] = std::move(specs);
  }
  auto list = [](const auto& items) {
    ordered_json out = ordered_json::array();
    for (const auto& item : items) out.push_back(to_json(item));
    return out;
  };
  if (file.matrices) j["matrices"] = list(*file.matrices);
  if (file.vectors) j["vectors"] = list(*file.vectors);
  if (file.outer_products) j["outer_products"] = list(*file.outer_products);
  return j.dump(2) + "\n";
}

Instance to_instance(const InstanceFile& file) {
  if (!file.specs) fail(ErrorCode::Parse, "$.specs: this command needs a random-vector instance");
  Instance inst{file.dim, *file.specs};
  inst.validate();
  return inst;
}

std::vector<HermitianMatrix> partition_outers(const InstanceFile& file) {
  std::vector<HermitianMatrix> out;
  if (file.vectors)
    for (const auto& v : *file.vectors) out.push_back(outer_product(v));
  if (file.outer_products) {
    for (std::size_t k = 0; k < file.outer_products->size(); ++k) {
      const auto& m = (*file.outer_products)[k];
      if (!is_psd(m) || !is_rank_at_most_one(m))
        fail(ErrorCode::Parse, "$.outer_products[" + std::to_string(k) + "]: must be PSD of rank at most one");
      out.push_back(m);
    }
  }
  if (!file.vectors && !file.outer_products)
    fail(ErrorCode::Parse, "$: this command needs \"vectors\" or \"outer_products\"");
  return out;
}

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace interlace
