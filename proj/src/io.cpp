#include "qhopf/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qhopf {

using nlohmann::json;

InputError::InputError(std::string source, std::size_t line, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + message),
      source_(std::move(source)),
      line_(line),
      message_(message) {}

namespace {

/// Line of the first character of every value, keyed by JSON pointer.
std::map<std::string, std::size_t> value_lines(const std::string& text) {
  struct Frame {
    bool object = false;
    std::string path;
    std::string key;
    std::size_t index = 0;
    bool want_key = true;
  };
  std::map<std::string, std::size_t> out;
  std::vector<Frame> stack;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto skip_string = [&] {
    std::string s;
    for (++i; i < n && text[i] != '"'; ++i) {
      if (text[i] == '\\') ++i;
      if (i < n) s += text[i];
    }
    ++i;
    return s;
  };

  while (i < n) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == ':') {
      ++i;
      continue;
    }
    if (c == ',') {
      if (!stack.empty()) {
        if (stack.back().object) {
          stack.back().want_key = true;
        } else {
          ++stack.back().index;
        }
      }
      ++i;
      continue;
    }
    if (c == '}' || c == ']') {
      if (!stack.empty()) stack.pop_back();
      ++i;
      continue;
    }
    if (!stack.empty() && stack.back().object && stack.back().want_key) {
      if (c == '"') {
        stack.back().key = skip_string();
        stack.back().want_key = false;
      } else {
        ++i;
      }
      continue;
    }
    std::string ptr;
    if (!stack.empty()) {
      const Frame& f = stack.back();
      ptr = f.path + "/" + (f.object ? f.key : std::to_string(f.index));
    }
    out.emplace(ptr, line);
    if (c == '{' || c == '[') {
      Frame f;
      f.object = c == '{';
      f.path = ptr;
      stack.push_back(std::move(f));
      ++i;
    } else if (c == '"') {
      skip_string();
    } else {
      while (i < n && text[i] != ',' && text[i] != '}' && text[i] != ']' && text[i] != '\n') ++i;
    }
  }
  return out;
}

struct Reader {
  std::string source;
  std::map<std::string, std::size_t> lines;

  std::size_t line_of(std::string ptr) const {
    while (true) {
      const auto it = lines.find(ptr);
      if (it != lines.end()) return it->second;
      if (ptr.empty()) return 0;
      ptr = ptr.substr(0, ptr.rfind('/'));
    }
  }

  [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const {
    throw InputError(source, line_of(ptr), msg);
  }

  const json& member(const json& obj, const std::string& ptr, const std::string& key) const {
    if (!obj.contains(key)) fail(ptr, "missing key \"" + key + "\"");
    return obj.at(key);
  }

  std::size_t index(const json& v, const std::string& ptr, std::size_t bound) const {
    if (!v.is_number_unsigned()) fail(ptr, "expected a non-negative integer index, got " + v.dump());
    const auto i = v.get<std::size_t>();
    if (i >= bound) fail(ptr, "index " + std::to_string(i) + " out of range (dimension " + std::to_string(bound) + ")");
    return i;
  }

  Scalar scalar(const json& v, const std::string& ptr, const FieldSpec& field) const {
    if (!v.is_string()) fail(ptr, "expected an exact scalar string such as \"1/2\" or \"p3\", got " + v.dump());
    try {
      return field.parse_scalar(v.get<std::string>());
    } catch (const std::exception& e) {
      fail(ptr, e.what());
    }
  }

  /// Entries [i_1, ..., i_arity, "c"]; calls put(indices, c) for each.
  template <class Put>
  void entries(const json& arr, const std::string& ptr, std::size_t arity, std::size_t bound,
               const FieldSpec& field, Put&& put) const {
    if (!arr.is_array()) fail(ptr, "expected an array of entries");
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t e = 0; e < arr.size(); ++e) {
      const std::string ep = ptr + "/" + std::to_string(e);
      const json& entry = arr[e];
      if (!entry.is_array() || entry.size() != arity + 1) {
        fail(ep, "expected an entry of " + std::to_string(arity) + " indices and a scalar");
      }
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k < arity; ++k) idx.push_back(index(entry[k], ep + "/" + std::to_string(k), bound));
      if (!seen.insert(idx).second) fail(ep, "duplicate entry");
      put(idx, scalar(entry[arity], ep + "/" + std::to_string(arity), field));
    }
  }

  Element sparse_vector(const json& arr, const std::string& ptr, std::size_t n, const FieldSpec& field) const {
    Element v(n);
    entries(arr, ptr, 1, n, field, [&](const auto& idx, const Scalar& c) { v[idx[0]] = c; });
    return v;
  }

  Tensor sparse_tensor(const json& arr, const std::string& ptr, std::size_t n, std::size_t rank,
                       const FieldSpec& field) const {
    Tensor t(n, rank);
    entries(arr, ptr, rank, n, field, [&](const auto& idx, const Scalar& c) { t.at(idx) = c; });
    return t;
  }

  std::vector<Element> vector_list(const json& arr, const std::string& ptr, std::size_t n,
                                   const FieldSpec& field) const {
    if (!arr.is_array()) fail(ptr, "expected an array of sparse vectors");
    std::vector<Element> out;
    for (std::size_t e = 0; e < arr.size(); ++e) {
      out.push_back(sparse_vector(arr[e], ptr + "/" + std::to_string(e), n, field));
    }
    return out;
  }

  QuasiHopfPresentation presentation(const json& j, const std::string& ptr, const std::optional<FieldSpec>& override,
                                     PresentationFile* top) const {
    static const std::set<std::string> known{"name",  "provenance", "field",   "dimension", "labels",
                                             "unit",  "mult",       "delta",   "counit",    "phi",
                                             "phi_inv", "antipode", "alpha",   "beta",      "embedding",
                                             "subalgebra"};
    if (!j.is_object()) fail(ptr, "expected an object");
    for (const auto& [key, value] : j.items()) {
      (void)value;
      if (!known.count(key)) fail(ptr + "/" + key, "unknown key \"" + key + "\"");
    }

    const json& tag = member(j, ptr, "field");
    if (!tag.is_string()) fail(ptr + "/field", "field tag must be a string");
    FieldSpec field;
    try {
      field = FieldSpec::parse(tag.get<std::string>());
    } catch (const std::exception& e) {
      fail(ptr + "/field", e.what());
    }
    if (override && !(*override == field)) {
      if (!field.is_rational()) {
        fail(ptr + "/field", "field-tag mismatch: file is " + field.tag() + ", requested " + override->tag());
      }
      field = *override;
    }

    const json& dim = member(j, ptr, "dimension");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) fail(ptr + "/dimension", "dimension must be a positive integer");
    const std::size_t n = dim.get<std::size_t>();

    QuasiHopfPresentation p;
    if (j.contains("name")) {
      if (!j["name"].is_string()) fail(ptr + "/name", "name must be a string");
      p.name = j["name"].get<std::string>();
    }
    if (j.contains("provenance")) {
      if (!j["provenance"].is_string()) fail(ptr + "/provenance", "provenance must be a string");
      p.provenance = j["provenance"].get<std::string>();
    }
    auto& a = p.qb.algebra;
    a.field = field;
    a.dim = n;
    if (j.contains("labels")) {
      const json& labels = j["labels"];
      if (!labels.is_array() || labels.size() != n) fail(ptr + "/labels", "labels must be an array of " + std::to_string(n) + " strings");
      for (std::size_t i = 0; i < n; ++i) {
        if (!labels[i].is_string()) fail(ptr + "/labels/" + std::to_string(i), "label must be a string");
        a.labels.push_back(labels[i].get<std::string>());
      }
    }
    a.unit = sparse_vector(member(j, ptr, "unit"), ptr + "/unit", n, field);
    a.mult = sparse_tensor(member(j, ptr, "mult"), ptr + "/mult", n, 3, field);
    p.qb.delta = Matrix(n * n, n);
    entries(member(j, ptr, "delta"), ptr + "/delta", 3, n, field,
            [&](const auto& idx, const Scalar& c) { p.qb.delta(idx[1] * n + idx[2], idx[0]) = c; });
    p.qb.counit = Functional(sparse_vector(member(j, ptr, "counit"), ptr + "/counit", n, field).coeffs());
    p.qb.phi = sparse_tensor(member(j, ptr, "phi"), ptr + "/phi", n, 3, field);
    p.qb.phi_inv = sparse_tensor(member(j, ptr, "phi_inv"), ptr + "/phi_inv", n, 3, field);
    p.antipode = Matrix(n, n);
    entries(member(j, ptr, "antipode"), ptr + "/antipode", 2, n, field,
            [&](const auto& idx, const Scalar& c) { p.antipode(idx[1], idx[0]) = c; });
    p.alpha = sparse_vector(member(j, ptr, "alpha"), ptr + "/alpha", n, field);
    p.beta = sparse_vector(member(j, ptr, "beta"), ptr + "/beta", n, field);

    if (j.contains("embedding") || j.contains("subalgebra")) {
      if (top == nullptr) fail(ptr, "nested presentations cannot carry an embedding or subalgebra");
    }
    if (j.contains("embedding")) {
      const std::string ep = ptr + "/embedding";
      const json& emb = j["embedding"];
      if (!emb.is_object()) fail(ep, "embedding must be an object with ambient_dimension and basis");
      const json& ad = member(emb, ep, "ambient_dimension");
      if (!ad.is_number_unsigned() || ad.get<std::size_t>() == 0) fail(ep + "/ambient_dimension", "ambient_dimension must be a positive integer");
      auto basis = vector_list(member(emb, ep, "basis"), ep + "/basis", ad.get<std::size_t>(), field);
      if (basis.size() != n) fail(ep + "/basis", "embedding needs one vector per basis element (" + std::to_string(n) + ")");
      top->embedding = std::move(basis);
    }
    if (j.contains("subalgebra")) {
      const std::string sp = ptr + "/subalgebra";
      const json& sub = j["subalgebra"];
      if (!sub.is_object()) fail(sp, "subalgebra must be an object with basis and presentation");
      SubalgebraBlock block;
      block.presentation = presentation(member(sub, sp, "presentation"), sp + "/presentation", field, nullptr);
      if (!(block.presentation.field() == field)) fail(sp + "/presentation/field", "subalgebra field differs from the ambient field");
      block.basis = vector_list(member(sub, sp, "basis"), sp + "/basis", n, field);
      if (block.basis.size() != block.presentation.dim()) {
        fail(sp + "/basis", "subalgebra basis has " + std::to_string(block.basis.size()) +
                                " vectors but its presentation has dimension " + std::to_string(block.presentation.dim()));
      }
      top->subalgebra = std::move(block);
    }
    try {
      check_shapes(p);
    } catch (const std::exception& e) {
      fail(ptr, e.what());
    }
    return p;
  }
};

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string entry_line(const std::vector<std::size_t>& idx, const Scalar& c) {
  std::string s = "[";
  for (std::size_t k : idx) s += std::to_string(k) + ", ";
  return s + quoted(c.str()) + "]";
}

std::string sparse_inline(const Element& v) {
  std::string s = "[";
  bool first = true;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) s += ", ";
    first = false;
    s += entry_line({i}, v[i]);
  }
  return s + "]";
}

/// "key": [\n entries \n] at the given indent.
std::string block(const std::string& pad, const std::string& key, const std::vector<std::string>& lines) {
  if (lines.empty()) return pad + quoted(key) + ": []";
  std::string s = pad + quoted(key) + ": [\n";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    s += pad + "  " + lines[i] + (i + 1 < lines.size() ? ",\n" : "\n");
  }
  return s + pad + "]";
}

std::vector<std::string> vector_lines(const Element& v) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!v[i].is_zero()) out.push_back(entry_line({i}, v[i]));
  }
  return out;
}

std::vector<std::string> tensor_lines(const Tensor& t) {
  std::vector<std::string> out;
  t.for_each_nonzero([&](const Tensor::Index& idx, const Scalar& c) { out.push_back(entry_line(idx, c)); });
  return out;
}

std::vector<std::string> presentation_members(const QuasiHopfPresentation& p, const std::string& pad) {
  const std::size_t n = p.dim();
  std::vector<std::string> m;
  m.push_back(pad + "\"name\": " + quoted(p.name));
  m.push_back(pad + "\"provenance\": " + quoted(p.provenance));
  m.push_back(pad + "\"field\": " + quoted(p.field().tag()));
  m.push_back(pad + "\"dimension\": " + std::to_string(n));
  if (!p.qb.algebra.labels.empty()) {
    std::string s = pad + "\"labels\": [";
    for (std::size_t i = 0; i < p.qb.algebra.labels.size(); ++i) {
      s += (i ? ", " : "") + quoted(p.qb.algebra.labels[i]);
    }
    m.push_back(s + "]");
  }
  m.push_back(block(pad, "unit", vector_lines(p.qb.algebra.unit)));
  m.push_back(block(pad, "mult", tensor_lines(p.qb.algebra.mult)));
  std::vector<std::string> delta;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& c = p.qb.delta(i * n + j, k);
        if (!c.is_zero()) delta.push_back(entry_line({k, i, j}, c));
      }
    }
  }
  m.push_back(block(pad, "delta", delta));
  m.push_back(block(pad, "counit", vector_lines(Element(p.qb.counit.coeffs()))));
  m.push_back(block(pad, "phi", tensor_lines(p.qb.phi)));
  m.push_back(block(pad, "phi_inv", tensor_lines(p.qb.phi_inv)));
  std::vector<std::string> s;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.antipode(j, i).is_zero()) s.push_back(entry_line({i, j}, p.antipode(j, i)));
    }
  }
  m.push_back(block(pad, "antipode", s));
  m.push_back(block(pad, "alpha", vector_lines(p.alpha)));
  m.push_back(block(pad, "beta", vector_lines(p.beta)));
  return m;
}

std::string join_object(const std::vector<std::string>& members, const std::string& pad) {
  std::string s = "{\n";
  for (std::size_t i = 0; i < members.size(); ++i) s += members[i] + (i + 1 < members.size() ? ",\n" : "\n");
  return s + pad + "}";
}

}  // namespace

PresentationFile parse_presentation_file(const std::string& text, const std::string& source,
                                         const std::optional<FieldSpec>& field) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line;
    }
    throw InputError(source, line, std::string("malformed JSON: ") + e.what());
  }
  Reader r{source, value_lines(text)};
  PresentationFile file;
  file.presentation = r.presentation(j, "", field, &file);
  return file;
}

std::string serialize_presentation(const QuasiHopfPresentation& p) {
  return join_object(presentation_members(p, "  "), "") + "\n";
}

std::string serialize_presentation_file(const PresentationFile& file) {
  auto members = presentation_members(file.presentation, "  ");
  if (file.embedding) {
    const std::size_t ad = file.embedding->empty() ? 0 : file.embedding->front().dim();
    std::vector<std::string> basis;
    for (const auto& v : *file.embedding) basis.push_back(sparse_inline(v));
    members.push_back("  \"embedding\": " +
                      join_object({"    \"ambient_dimension\": " + std::to_string(ad), block("    ", "basis", basis)}, "  "));
  }
  if (file.subalgebra) {
    std::vector<std::string> basis;
    for (const auto& v : file.subalgebra->basis) basis.push_back(sparse_inline(v));
    const std::string inner = join_object(presentation_members(file.subalgebra->presentation, "      "), "    ");
    members.push_back("  \"subalgebra\": " +
                      join_object({block("    ", "basis", basis), "    \"presentation\": " + inner}, "  "));
  }
  return join_object(members, "") + "\n";
}

PresentationFile load_presentation_file(const std::string& path, const std::optional<FieldSpec>& field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, 0, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation_file(ss.str(), path, field);
}

void save_presentation_file(const std::string& path, const PresentationFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_presentation_file(file);
}

SubalgebraPair pair_from_files(const PresentationFile& file, const std::optional<PresentationFile>& sub) {
  SubalgebraPair pair;
  pair.ambient = file.presentation;
  if (sub) {
    if (!sub->embedding) throw InputError("<sub>", 0, "subalgebra file has no embedding block");
    for (const auto& v : *sub->embedding) {
      if (v.dim() != file.presentation.dim()) {
        throw InputError("<sub>", 0, "embedding ambient_dimension " + std::to_string(v.dim()) +
                                         " does not match the ambient dimension " +
                                         std::to_string(file.presentation.dim()));
      }
    }
    if (!(sub->presentation.field() == file.presentation.field())) {
      throw InputError("<sub>", 0, "field-tag mismatch between ambient and subalgebra files");
    }
    pair.sub_basis = *sub->embedding;
    pair.sub_presentation = sub->presentation;
    return pair;
  }
  if (!file.subalgebra) throw InputError("<input>", 0, "no subalgebra: pass --sub or use a file with a subalgebra block");
  pair.sub_basis = file.subalgebra->basis;
  pair.sub_presentation = file.subalgebra->presentation;
  return pair;
}

PresentationFile file_for_pair(const SubalgebraPair& pair) {
  PresentationFile f;
  f.presentation = pair.ambient;
  f.subalgebra = SubalgebraBlock{pair.sub_basis, pair.sub_presentation};
  return f;
}

}  // namespace qhopf
