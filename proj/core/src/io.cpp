// Copyright 2026 The degga Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "degga/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "degga/error.hpp"

namespace degga {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

// Yields (line number, words) for non-blank, non-comment lines.
std::vector<std::pair<int, std::vector<std::string_view>>> tokenize(
    std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string_view>>> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    auto words = split_words(line);
    if (!words.empty() && words.front().front() != '#') {
      lines.emplace_back(number, std::move(words));
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

template <typename T>
T parse_number(std::string_view word, int line, const char* what) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    fail(line, std::string("bad ") + what + " '" + std::string(word) + "'");
  }
  return value;
}

void expect_keyword(const std::vector<std::string_view>& words, int line,
                    std::string_view keyword) {
  if (words.size() != 2 || words[0] != keyword) {
    fail(line, "expected '" + std::string(keyword) + " <value>'");
  }
}

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * fraction);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string census_label(GateKind kind, int controls) {
  std::string name(kind_name(kind));
  if (kind == GateKind::MCPS || kind == GateKind::MCX) {
    name += "[" + std::to_string(controls) + "]";
  }
  return name;
}

}  // namespace

std::string format_phase(double phase) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", phase);
  return buf;
}

std::string serialize_circuit(const Circuit& circuit) {
  std::string out = "qubits " + std::to_string(circuit.n_qubits()) + "\n";
  for (const auto& g : circuit.gates()) {
    out += kind_name(g.kind());
    if (has_phase(g.kind())) out += " " + format_phase(g.phase());
    out += " " + std::to_string(g.target());
    for (int c : g.controls()) out += " " + std::to_string(c);
    out += '\n';
  }
  return out;
}

Circuit parse_circuit(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty circuit file");
  const auto& [head_line, head] = lines.front();
  expect_keyword(head, head_line, "qubits");
  const int n = parse_number<int>(head[1], head_line, "qubit count");
  if (n < 1 || n > kMaxQubits) {
    throw ValidationError("qubit count must be in 1.." +
                          std::to_string(kMaxQubits));
  }
  Circuit circuit(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, words] = lines[i];
    const auto kind = parse_kind(words[0]);
    if (!kind) fail(number, "unknown gate '" + std::string(words[0]) + "'");
    std::size_t w = 1;
    double phase = 0.0;
    if (has_phase(*kind)) {
      if (w >= words.size()) fail(number, "missing phase");
      phase = parse_number<double>(words[w++], number, "phase");
    }
    if (w >= words.size()) fail(number, "missing target");
    const int target = parse_number<int>(words[w++], number, "qubit");
    std::vector<int> controls;
    for (; w < words.size(); ++w) {
      controls.push_back(parse_number<int>(words[w], number, "qubit"));
    }
    try {
      Gate g = Gate::make(*kind, target, std::move(controls), phase);
      if (g.max_qubit() >= n) {
        throw ValidationError("qubit " + std::to_string(g.max_qubit()) +
                              " out of range for " + std::to_string(n) +
                              " qubits");
      }
      circuit.append(std::move(g));
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return circuit;
}

std::string serialize_results(const SampleReport& report) {
  std::string out = "qubits " + std::to_string(report.n_qubits) + "\n";
  out += "shots " + std::to_string(report.shots) + "\n";
  out += "seed " + std::to_string(report.seed) + "\n";
  for (const auto& [bits, count] : report.histogram) {
    out += bits.str() + " " + std::to_string(count) + "\n";
  }
  return out;
}

SampleReport parse_results(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.size() < 3) throw ParseError("results need qubits, shots and seed");
  SampleReport r;
  expect_keyword(lines[0].second, lines[0].first, "qubits");
  r.n_qubits = parse_number<int>(lines[0].second[1], lines[0].first, "width");
  expect_keyword(lines[1].second, lines[1].first, "shots");
  r.shots = parse_number<std::uint64_t>(lines[1].second[1], lines[1].first,
                                        "shot count");
  expect_keyword(lines[2].second, lines[2].first, "seed");
  r.seed = parse_number<std::uint64_t>(lines[2].second[1], lines[2].first,
                                       "seed");
  std::uint64_t sum = 0;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const auto& [number, words] = lines[i];
    if (words.size() != 2) fail(number, "expected '<bitstring> <count>'");
    const BitString bits = BitString::parse(words[0]);
    if (bits.width() != r.n_qubits) fail(number, "bitstring width mismatch");
    const auto count = parse_number<std::uint64_t>(words[1], number, "count");
    if (!r.histogram.emplace(bits, count).second) {
      fail(number, "duplicate outcome " + bits.str());
    }
    sum += count;
  }
  if (sum != r.shots) {
    throw ValidationError("histogram counts sum to " + std::to_string(sum) +
                          ", expected " + std::to_string(r.shots));
  }
  return r;
}

std::string results_csv(const SampleReport& report) {
  std::string out = "bitstring,count\n";
  for (const auto& [bits, count] : report.histogram) {
    out += bits.str() + "," + std::to_string(count) + "\n";
  }
  return out;
}

std::string results_svg(const SampleReport& report) {
  constexpr int kBar = 40;
  constexpr int kGap = 16;
  constexpr int kHeight = 240;
  constexpr int kMargin = 40;
  const int bars = static_cast<int>(report.histogram.size());
  const int width = 2 * kMargin + std::max(1, bars) * (kBar + kGap);
  const int height = kHeight + 2 * kMargin + 40;
  std::uint64_t peak = 1;
  for (const auto& entry : report.histogram) peak = std::max(peak, entry.second);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"sans-serif\" "
      << "font-size=\"11\">\n";
  svg << "<text x=\"" << kMargin << "\" y=\"20\">shots=" << report.shots
      << " seed=" << report.seed << "</text>\n";
  const int base = kMargin + kHeight;
  svg << "<line x1=\"" << kMargin << "\" y1=\"" << base << "\" x2=\""
      << width - kMargin << "\" y2=\"" << base << "\" stroke=\"black\"/>\n";
  int x = kMargin + kGap / 2;
  for (const auto& [bits, count] : report.histogram) {
    const int h = static_cast<int>(
        static_cast<double>(count) / static_cast<double>(peak) * kHeight);
    svg << "<rect x=\"" << x << "\" y=\"" << base - h << "\" width=\"" << kBar
        << "\" height=\"" << h << "\" fill=\"steelblue\"/>\n";
    svg << "<text x=\"" << x + kBar / 2 << "\" y=\"" << base - h - 4
        << "\" text-anchor=\"middle\">" << count << "</text>\n";
    svg << "<text x=\"" << x + kBar / 2 << "\" y=\"" << base + 14
        << "\" text-anchor=\"middle\" transform=\"rotate(45 " << x + kBar / 2
        << " " << base + 14 << ")\">" << bits.str() << "</text>\n";
    x += kBar + kGap;
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string census_table(const GateCensus& census) {
  std::string out;
  out += pad("total", 10) + std::to_string(census.total) + "\n";
  out += pad("depth", 10) + std::to_string(census.depth) + "\n";
  for (const auto& [key, count] : census.by_arity) {
    out += pad(census_label(key.first, key.second), 10) +
           std::to_string(count) + "\n";
  }
  return out;
}

std::string comparison_table(const ComparisonReport& report) {
  std::size_t label_width = 5;
  for (const auto& row : report.rows) {
    label_width = std::max(label_width, row.label.size());
  }
  label_width += 2;
  std::string out = pad("label", label_width) + pad("gates", 10) +
                    pad("depth", 10) + pad("lowered", 10) + "lowered-depth\n";
  for (const auto& row : report.rows) {
    out += pad(row.label, label_width) +
           pad(std::to_string(row.before.total), 10) +
           pad(std::to_string(row.before.depth), 10) +
           pad(std::to_string(row.after.total), 10) +
           std::to_string(row.after.depth) + "\n";
  }
  out += "gate reduction  " + percent(report.gate_reduction) + "\n";
  out += "depth reduction " + percent(report.depth_reduction) + "\n";
  return out;
}

std::string comparison_csv(const ComparisonReport& report) {
  std::string out = "label,gates,depth,lowered_gates,lowered_depth\n";
  for (const auto& row : report.rows) {
    out += row.label + "," + std::to_string(row.before.total) + "," +
           std::to_string(row.before.depth) + "," +
           std::to_string(row.after.total) + "," +
           std::to_string(row.after.depth) + "\n";
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "reduction,,,%.6f,%.6f\n",
                report.gate_reduction, report.depth_reduction);
  out += buf;
  return out;
}

std::string divergence_table(const std::vector<DepthDivergence>& rows) {
  std::size_t w = 8;
  for (const auto& r : rows) w = std::max(w, r.instance.size());
  w += 2;
  std::string out = pad("instance", w) + pad("formula", 29) +
                    pad("formula-depth", 15) + "measured-depth\n";
  for (const auto& r : rows) {
    out += pad(r.instance, w) + pad(r.formula, 29) +
           pad(std::to_string(r.formula_depth), 15) +
           std::to_string(r.measured_depth) + "\n";
  }
  out +=
      "gap: the closed-form depths ignore circuit optimization; measured "
      "depths are ASAP layers of the circuits actually built.\n";
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error("cannot read " + path.string());
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error("cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot replace " + path.string());
  }
}

}  // namespace degga
