//  Copyright 2026 The almonoid Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "almonoid/io.hpp"

#include <fstream>
#include <sstream>

#include "almonoid/builtins.hpp"
#include "almonoid/constructions.hpp"
#include "almonoid/errors.hpp"

namespace almonoid {

namespace {

// Lines with comments stripped; blank lines skipped.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& out) {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream probe(line);
      std::string word;
      if (probe >> word) {
        out = line;
        return true;
      }
    }
    return false;
  }

  int lineno() const { return lineno_; }

 private:
  std::istream& in_;
  int lineno_ = 0;
};

std::vector<int> parse_row(const std::string& line, int n, int lineno) {
  std::istringstream ss(line);
  std::vector<int> row;
  int v;
  while (ss >> v) row.push_back(v);
  std::string junk;
  if (ss.clear(), ss >> junk)
    throw SyntaxError("unexpected token '" + junk + "' in table row", lineno, 1);
  if (static_cast<int>(row.size()) != n)
    throw SyntaxError("expected " + std::to_string(n) + " entries in row",
                      lineno, 1);
  return row;
}

}  // namespace

FiniteAlgebra read_algebra(std::istream& in, const std::string& name) {
  LineReader reader(in);
  std::string line;

  auto expect_line = [&](const char* what) {
    if (!reader.next(line))
      throw SyntaxError(std::string("expected ") + what + ", got end of input",
                        reader.lineno() + 1, 1);
  };

  expect_line("'size n'");
  int n = 0;
  {
    std::istringstream ss(line);
    std::string kw;
    if (!(ss >> kw >> n) || kw != "size" || n <= 0)
      throw SyntaxError("expected 'size n' with positive n", reader.lineno(), 1);
  }
  expect_line("'zero i'");
  int zero = 0;
  {
    std::istringstream ss(line);
    std::string kw;
    if (!(ss >> kw >> zero) || kw != "zero")
      throw SyntaxError("expected 'zero i'", reader.lineno(), 1);
    if (zero < 0 || zero >= n)
      throw MalformedTableError("zero index out of range");
  }

  FiniteAlgebra a(name.empty() ? "algebra" : name, n, zero);
  bool star_derived = false;

  const struct {
    const char* keyword;
    std::vector<int> FiniteAlgebra::*table;
  } blocks[] = {
      {"plus", &FiniteAlgebra::plus},
      {"join", &FiniteAlgebra::join},
      {"meet", &FiniteAlgebra::meet},
      {"star", &FiniteAlgebra::star},
  };

  for (const auto& block : blocks) {
    expect_line("a table keyword");
    std::istringstream ss(line);
    std::string kw, mode;
    ss >> kw;
    if (kw != block.keyword)
      throw SyntaxError("expected '" + std::string(block.keyword) + "' block",
                        reader.lineno(), 1);
    if (ss >> mode) {
      if (std::string(block.keyword) == "star" && mode == "derived") {
        star_derived = true;
        continue;
      }
      throw SyntaxError("unexpected token after block keyword",
                        reader.lineno(), 1);
    }
    for (int r = 0; r < n; ++r) {
      expect_line("a table row");
      const auto row = parse_row(line, n, reader.lineno());
      for (int c = 0; c < n; ++c) {
        if (row[c] < 0 || row[c] >= n)
          throw MalformedTableError("table entry out of range at line " +
                                    std::to_string(reader.lineno()));
        (a.*(block.table))[r * n + c] = row[c];
      }
    }
  }
  if (reader.next(line))
    throw SyntaxError("trailing content after star block", reader.lineno(), 1);

  if (star_derived) {
    a = drl_to_al(a);
    a.name = name.empty() ? "algebra" : name;
  }
  return a;
}

FiniteAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_algebra(in, path);
}

std::string write_algebra(const FiniteAlgebra& a) {
  std::ostringstream out;
  out << "size " << a.n << "\n";
  out << "zero " << a.zero << "\n";
  const struct {
    const char* keyword;
    const std::vector<int>* table;
  } blocks[] = {
      {"plus", &a.plus}, {"join", &a.join}, {"meet", &a.meet}, {"star", &a.star}};
  for (const auto& block : blocks) {
    out << block.keyword << "\n";
    for (int r = 0; r < a.n; ++r) {
      for (int c = 0; c < a.n; ++c) {
        if (c) out << ' ';
        out << (*block.table)[r * a.n + c];
      }
      out << "\n";
    }
  }
  return out.str();
}

Model load_model(const std::string& ref) {
  if (auto m = builtin_model(ref)) return std::move(*m);
  return Model(read_algebra_file(ref));
}

Congruence read_partition_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  if (!j.is_array()) throw std::runtime_error("partition must be a JSON array");
  std::vector<std::vector<int>> classes;
  for (const auto& cls : j) {
    if (!cls.is_array())
      throw std::runtime_error("partition classes must be arrays");
    classes.push_back(cls.get<std::vector<int>>());
  }
  return Congruence::from_classes(n, classes);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json witness_json(const std::optional<Assignment>& w) {
  if (!w) return nullptr;
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [var, elem] : *w) out[var] = to_string(elem);
  return out;
}

nlohmann::json elems_json(const std::vector<Elem>& es) {
  nlohmann::json out = nlohmann::json::array();
  for (const Elem& e : es) out.push_back(to_string(e));
  return out;
}

}  // namespace

nlohmann::json to_json(const ClaimReport& r) {
  nlohmann::json j{{"id", r.id},
                   {"verdict", verdict_name(r.verdict)},
                   {"witness", witness_json(r.witness)},
                   {"checked", r.checked},
                   {"skipped", r.skipped}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const AxiomResult& r) {
  return nlohmann::json{{"axiom", r.axiom},
                        {"verdict", verdict_name(r.verdict)},
                        {"witness", witness_json(r.witness)},
                        {"checked", r.checked},
                        {"skipped", r.skipped}};
}

nlohmann::json to_json(const ProfileReport& r) {
  nlohmann::json axioms = nlohmann::json::array();
  for (const auto& ax : r.axioms) axioms.push_back(to_json(ax));
  return nlohmann::json{{"profile", r.profile},
                        {"subject", r.subject},
                        {"overall", verdict_name(r.overall())},
                        {"axioms", axioms}};
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations)
    violations.push_back(
        nlohmann::json{{"law", v.law}, {"witness", elems_json(v.witness)}});
  return nlohmann::json{{"subject", r.subject},
                        {"verdict", verdict_name(r.verdict)},
                        {"violations", violations}};
}

nlohmann::json to_json(const StructureReport& r) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& it : r.items) {
    nlohmann::json j{{"name", it.name},
                     {"verdict", verdict_name(it.verdict)},
                     {"witness", elems_json(it.witness)}};
    if (!it.note.empty()) j["note"] = it.note;
    items.push_back(std::move(j));
  }
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : r.pairs)
    pairs.push_back(nlohmann::json::array({to_string(a), to_string(b)}));
  nlohmann::json j{{"analysis", r.analysis},
                   {"subject", r.subject},
                   {"overall", verdict_name(r.overall())},
                   {"elements", elems_json(r.elements)},
                   {"pairs", pairs},
                   {"items", items}};
  if (r.distinguished) j["distinguished"] = to_string(*r.distinguished);
  return j;
}

nlohmann::json to_json(const IndependenceReport& r) {
  nlohmann::json dirs = nlohmann::json::array();
  for (const auto& d : r.directions) {
    nlohmann::json j{{"name", d.name},
                     {"established", d.established},
                     {"model", d.model},
                     {"satisfied", d.satisfied},
                     {"violated", d.violated},
                     {"witness", witness_json(d.witness)},
                     {"computation", d.computation}};
    if (!d.note.empty()) j["note"] = d.note;
    if (d.search_bound > 0) j["search_bound"] = d.search_bound;
    dirs.push_back(std::move(j));
  }
  nlohmann::json j{{"directions", dirs}};
  if (r.witness_model) j["witness_model"] = write_algebra(*r.witness_model);
  return j;
}

// ---------------------------------------------------------------------------
// Text rendering

std::string render_text(const ClaimReport& r) {
  std::string out = r.id + ": " + verdict_name(r.verdict);
  if (r.witness) out += " witness " + to_string(*r.witness);
  out += " (checked " + std::to_string(r.checked) + ", skipped " +
         std::to_string(r.skipped) + ")";
  if (!r.note.empty()) out += " [" + r.note + "]";
  return out;
}

std::string render_text(const ProfileReport& r) {
  std::string out = r.subject + " profile " + r.profile + ": " +
                    verdict_name(r.overall()) + "\n";
  for (const auto& ax : r.axioms) {
    out += "  " + ax.axiom + ": " + verdict_name(ax.verdict);
    if (ax.witness) out += " witness " + to_string(*ax.witness);
    if (ax.skipped > 0) out += " (skipped " + std::to_string(ax.skipped) + ")";
    out += "\n";
  }
  return out;
}

std::string render_text(const CheckReport& r) {
  std::string out = r.subject + ": " + verdict_name(r.verdict) + "\n";
  for (const auto& v : r.violations) {
    out += "  " + v.law + " witness (";
    for (size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out += ", ";
      out += to_string(v.witness[i]);
    }
    out += ")\n";
  }
  return out;
}

std::string render_text(const StructureReport& r) {
  std::string out = r.subject + " " + r.analysis + ": " +
                    verdict_name(r.overall()) + "\n  elements {";
  for (size_t i = 0; i < r.elements.size(); ++i) {
    if (i) out += ", ";
    out += to_string(r.elements[i]);
  }
  out += "}\n";
  if (r.distinguished) out += "  distinguished " + to_string(*r.distinguished) + "\n";
  if (!r.pairs.empty()) {
    out += "  pairs";
    for (const auto& [a, b] : r.pairs)
      out += " (" + to_string(a) + "," + to_string(b) + ")";
    out += "\n";
  }
  for (const auto& it : r.items) {
    out += "  " + it.name + ": " + verdict_name(it.verdict);
    if (!it.witness.empty()) {
      out += " witness (";
      for (size_t i = 0; i < it.witness.size(); ++i) {
        if (i) out += ", ";
        out += to_string(it.witness[i]);
      }
      out += ")";
    }
    if (!it.note.empty()) out += " [" + it.note + "]";
    out += "\n";
  }
  return out;
}

std::string render_text(const IndependenceReport& r) {
  std::string out;
  for (const auto& d : r.directions) {
    out += d.name + ": " + (d.established ? "established" : "not established");
    if (!d.model.empty()) out += " on " + d.model;
    if (!d.satisfied.empty()) {
      out += " (satisfies";
      for (const auto& s : d.satisfied) out += " " + s;
      out += "; violates " + d.violated + ")";
    }
    if (d.witness) out += " witness " + to_string(*d.witness);
    if (!d.note.empty()) out += " [" + d.note + "]";
    out += "\n";
    for (const auto& step : d.computation) out += "    " + step + "\n";
  }
  if (r.witness_model) out += "witness model:\n" + write_algebra(*r.witness_model);
  return out;
}

}  // namespace almonoid
