#include "hdq/codec.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "hdq/error.hpp"
#include "json.hpp"

namespace hdq {

namespace {

using Tokens = std::vector<std::string_view>;

Tokens split(std::string_view line) {
  Tokens out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const auto start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
T number(std::string_view tok, std::size_t line, const char* what) {
  T value{};
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(tok) + "'", line);
  }
  return value;
}

GraphKind parse_kind(std::string_view family, int n, std::string_view k, std::size_t line) {
  try {
    if (family == "Q") {
      if (k != ".") throw ParseError("hypercube header needs '.' for k", line);
      return GraphKind::hypercube(n);
    }
    if (family == "G") return GraphKind::torus(n, number<int>(k, line, "k"));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), line);
  }
  throw ParseError("family must be Q or G, got '" + std::string(family) + "'", line);
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }
  std::size_t number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

void write_matrix_lines(std::ostream& out, const SourceMatrix& m) {
  out << "MATRIX " << m.size() << '\n';
  for (const auto& row : m.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
}

void write_mset_lines(std::ostream& out, const MergingSet& s) {
  out << "MSET " << s.n << ' ' << s.elements.size() << '\n';
  for (const auto& p : s.elements) out << p.x << ' ' << p.y << ' ' << p.z << '\n';
}

std::uint64_t header_cycle_len(const Artifact& a) {
  if (a.cycles.empty()) return a.kind.cycle_length();
  const auto len = a.cycles.front().steps.size();
  for (const auto& c : a.cycles) {
    if (!(c.kind == a.kind)) {
      throw InvalidArgument("cycle in " + c.kind.to_string() + " inside a " + a.kind.to_string() +
                            " artifact");
    }
    if (c.steps.size() != len) throw InvalidArgument("cycles of one artifact must share a length");
  }
  return len;
}

char family_char(const GraphKind& k) { return k.family() == Family::Hypercube ? 'Q' : 'G'; }

}  // namespace

Artifact Artifact::from(const SourcePair& sp) {
  Artifact a;
  a.kind = sp.cycle.kind;
  a.cycles.push_back(sp.cycle);
  a.matrix = sp.matrix;
  return a;
}

Artifact Artifact::from(std::vector<CycleCode> cycles) {
  if (cycles.empty()) throw InvalidArgument("an artifact built from cycles needs at least one");
  Artifact a;
  a.kind = cycles.front().kind;
  a.cycles = std::move(cycles);
  return a;
}

SourcePair Artifact::source_pair() const {
  if (!matrix) throw InvalidArgument("artifact has no MATRIX section");
  if (cycles.size() != 1) throw InvalidArgument("a source pair file holds exactly one cycle");
  return {cycles.front(), *matrix};
}

std::string format_steps(std::span<const EdgeStep> steps) {
  std::string out;
  out.reserve(steps.size() * 3);
  char buf[8];
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ' ';
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, steps[i].to_signed());
    out.append(buf, end);
  }
  return out;
}

void encode_text(const Artifact& a, std::ostream& out) {
  const auto len = header_cycle_len(a);
  StreamWriter w(out, a.kind, a.cycles.size(), len);
  for (const auto& c : a.cycles) w.write_cycle(c.steps);
  if (a.matrix) w.write_matrix(*a.matrix);
  if (a.merging_set) w.write_merging_set(*a.merging_set);
  w.finish();
}

std::string encode_text(const Artifact& a) {
  std::ostringstream os;
  encode_text(a, os);
  return os.str();
}

Artifact decode_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return decode_text(in);
}

Artifact decode_text(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError("empty input", 1);
  auto head = split(line);
  if (head.size() != 6 || head[0] != "HDQ1") {
    throw ParseError("header must be 'HDQ1 <Q|G> <n> <k|.> <num_cycles> <cycle_len>'", 1);
  }
  Artifact a;
  a.kind = parse_kind(head[1], number<int>(head[2], 1, "n"), head[3], 1);
  const auto num_cycles = number<std::uint64_t>(head[4], 1, "cycle count");
  const auto cycle_len = number<std::uint64_t>(head[5], 1, "cycle length");
  if (num_cycles > 64) throw ParseError("more cycles than any supported decomposition", 1);

  for (std::uint64_t c = 0; c < num_cycles; ++c) {
    if (!reader.next(line)) {
      throw ParseError("expected " + std::to_string(num_cycles) + " cycles, file ends after " +
                           std::to_string(c),
                       reader.number() + 1);
    }
    const auto toks = split(line);
    if (toks.size() != cycle_len) {
      throw ParseError("cycle has " + std::to_string(toks.size()) + " steps, header says " +
                           std::to_string(cycle_len),
                       reader.number());
    }
    CycleCode cycle{a.kind, {}};
    cycle.steps.reserve(toks.size());
    for (const auto tok : toks) {
      const int v = number<int>(tok, reader.number(), "signed dimension");
      if (v == 0 || v > a.kind.axes() || -v > a.kind.axes()) {
        throw ParseError("step " + std::string(tok) + " out of range for " + a.kind.to_string(),
                         reader.number());
      }
      cycle.steps.push_back(EdgeStep::from_signed(v));
    }
    a.cycles.push_back(std::move(cycle));
  }

  int section = 0;
  while (reader.next(line)) {
    const auto toks = split(line);
    if (toks.empty()) {
      // Only trailing blank lines are tolerated.
      while (reader.next(line)) {
        if (!split(line).empty()) throw ParseError("unexpected blank line", reader.number() - 1);
      }
      break;
    }
    const auto at = reader.number();
    if (toks[0] == "MATRIX" && section < 1) {
      if (toks.size() != 2) throw ParseError("expected 'MATRIX <k>'", at);
      const auto k = number<int>(toks[1], at, "matrix size");
      if (k < 1 || k > 64) throw ParseError("matrix size out of range", at);
      std::vector<std::vector<int>> rows;
      for (int i = 0; i < k; ++i) {
        if (!reader.next(line)) throw ParseError("matrix ends early", reader.number() + 1);
        const auto cells = split(line);
        if (cells.size() != static_cast<std::size_t>(k)) {
          throw ParseError("matrix row needs " + std::to_string(k) + " entries", reader.number());
        }
        auto& row = rows.emplace_back();
        for (const auto cell : cells) row.push_back(number<int>(cell, reader.number(), "matrix entry"));
      }
      try {
        a.matrix = SourceMatrix(std::move(rows));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), at);
      }
      section = 1;
    } else if (toks[0] == "MSET" && section < 2) {
      if (toks.size() != 3) throw ParseError("expected 'MSET <n> <count>'", at);
      MergingSet s;
      s.n = number<int>(toks[1], at, "n");
      const auto count = number<std::uint64_t>(toks[2], at, "element count");
      if (s.n < 1 || s.n > 10) throw ParseError("merging set n out of range", at);
      if (count > (std::uint64_t{1} << (2 * s.n))) throw ParseError("merging set too large", at);
      for (std::uint64_t i = 0; i < count; ++i) {
        if (!reader.next(line)) throw ParseError("merging set ends early", reader.number() + 1);
        const auto xyz = split(line);
        if (xyz.size() != 3) throw ParseError("expected 'x y z'", reader.number());
        s.elements.push_back({number<std::uint64_t>(xyz[0], reader.number(), "coordinate"),
                              number<std::uint64_t>(xyz[1], reader.number(), "coordinate"),
                              number<std::uint64_t>(xyz[2], reader.number(), "coordinate")});
      }
      a.merging_set = std::move(s);
      section = 2;
    } else {
      throw ParseError("unexpected line '" + line.substr(0, 40) + "'", at);
    }
  }
  return a;
}

std::string encode_json(const Artifact& a) {
  nlohmann::ordered_json j;
  j["format"] = "HDQ1";
  j["family"] = std::string(1, family_char(a.kind));
  j["n"] = a.kind.n();
  j["k"] = a.kind.family() == Family::Torus ? nlohmann::ordered_json(a.kind.k()) : nullptr;
  j["cycle_len"] = header_cycle_len(a);
  auto& cycles = j["cycles"] = nlohmann::ordered_json::array();
  for (const auto& c : a.cycles) {
    auto& row = cycles.emplace_back(nlohmann::ordered_json::array());
    for (const auto& s : c.steps) row.push_back(s.to_signed());
  }
  j["matrix"] = a.matrix ? nlohmann::ordered_json(a.matrix->rows()) : nullptr;
  if (a.merging_set) {
    auto elems = nlohmann::ordered_json::array();
    for (const auto& p : a.merging_set->elements) elems.push_back({p.x, p.y, p.z});
    j["merging_set"] = {{"n", a.merging_set->n}, {"elements", std::move(elems)}};
  } else {
    j["merging_set"] = nullptr;
  }
  return j.dump() + "\n";
}

Artifact decode_json(std::string_view text) {
  // Re-expressed as HDQ1 text so both forms share one set of checks.
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    if (j.at("format") != "HDQ1") throw ParseError("format must be HDQ1", 1);
    std::ostringstream os;
    const auto& cycles = j.at("cycles");
    os << "HDQ1 " << j.at("family").get<std::string>() << ' ' << j.at("n").get<int>() << ' '
       << (j.at("k").is_null() ? std::string(".") : std::to_string(j.at("k").get<int>())) << ' '
       << cycles.size() << ' ' << j.at("cycle_len").get<std::uint64_t>() << '\n';
    for (const auto& c : cycles) {
      bool first = true;
      for (const auto& v : c) {
        if (!first) os << ' ';
        first = false;
        os << v.get<int>();
      }
      os << '\n';
    }
    if (j.contains("matrix") && !j["matrix"].is_null()) {
      const auto& m = j["matrix"];
      os << "MATRIX " << m.size() << '\n';
      for (const auto& row : m) {
        bool first = true;
        for (const auto& v : row) {
          if (!first) os << ' ';
          first = false;
          os << v.get<int>();
        }
        os << '\n';
      }
    }
    if (j.contains("merging_set") && !j["merging_set"].is_null()) {
      const auto& s = j["merging_set"];
      const auto& elems = s.at("elements");
      os << "MSET " << s.at("n").get<int>() << ' ' << elems.size() << '\n';
      for (const auto& p : elems) {
        os << p.at(0).get<std::uint64_t>() << ' ' << p.at(1).get<std::uint64_t>() << ' '
           << p.at(2).get<std::uint64_t>() << '\n';
      }
    }
    return decode_text(os.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON artifact: ") + e.what(), 1);
  }
}

CycleCode parse_overline(std::string_view text, const GraphKind& kind) {
  CycleCode out{kind, {}};
  const Lattice lattice(kind);
  auto push = [&](int dim, bool backward, std::size_t pos) {
    const auto s = backward ? EdgeStep::backward(dim) : EdgeStep::forward(dim);
    if (dim < 1 || !lattice.valid_step(s)) {
      throw ParseError("dimension " + std::to_string(dim) + " at offset " + std::to_string(pos) +
                           " out of range for " + kind.to_string(),
                       1);
    }
    out.steps.push_back(s);
  };

  const bool compact = text.find("\\overline") != std::string_view::npos ||
                       (split(text).size() == 1 && text.find('-') == std::string_view::npos);
  if (!compact) {
    std::string normalized(text);
    for (auto& ch : normalized) {
      if (ch == ',') ch = ' ';
    }
    for (auto tok : split(normalized)) {
      bool backward = false;
      if (tok.front() == '~' || tok.front() == '-') {
        backward = true;
        tok.remove_prefix(1);
      } else if (tok.back() == '\'') {
        backward = true;
        tok.remove_suffix(1);
      }
      if (tok.empty()) throw ParseError("empty step token", 1);
      push(number<int>(tok, 1, "dimension"), backward, 0);
    }
    return out;
  }

  constexpr std::string_view kOpen = "\\overline{";
  bool in_bar = false;
  bool tilde = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '$') continue;
    if (text.substr(i, kOpen.size()) == kOpen) {
      if (in_bar) throw ParseError("nested \\overline", 1);
      in_bar = true;
      i += kOpen.size() - 1;
    } else if (ch == '}' && in_bar) {
      in_bar = false;
    } else if (ch == '~') {
      tilde = true;
    } else if (ch == '\'') {
      if (out.steps.empty()) throw ParseError("apostrophe before any step", 1);
      out.steps.back() = out.steps.back().reversed();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      push(ch - '0', in_bar != tilde, i);
      tilde = false;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "' at offset " + std::to_string(i), 1);
    }
  }
  if (in_bar) throw ParseError("unterminated \\overline", 1);
  if (tilde) throw ParseError("trailing '~'", 1);
  return out;
}

StreamWriter::StreamWriter(std::ostream& out, const GraphKind& kind, std::uint64_t num_cycles,
                           std::uint64_t cycle_len)
    : out_(out), kind_(kind), num_cycles_(num_cycles), cycle_len_(cycle_len) {
  out_ << "HDQ1 " << family_char(kind_) << ' ' << kind_.n() << ' ';
  if (kind_.family() == Family::Torus) {
    out_ << kind_.k();
  } else {
    out_ << '.';
  }
  out_ << ' ' << num_cycles_ << ' ' << cycle_len_ << '\n';
}

void StreamWriter::put(EdgeStep s) {
  if (section_ != 0 || cycles_done_ >= num_cycles_) throw InvalidArgument("all cycles already written");
  if (in_cycle_ >= cycle_len_) throw InvalidArgument("cycle longer than the declared length");
  if (s.dimension < 1 || s.dimension > kind_.axes()) {
    throw InvalidArgument("step dimension " + std::to_string(s.dimension) + " out of range for " +
                          kind_.to_string());
  }
  char buf[8];
  char* p = buf;
  if (in_cycle_) *p++ = ' ';
  p = std::to_chars(p, buf + sizeof buf, s.to_signed()).ptr;
  out_.write(buf, p - buf);
  ++in_cycle_;
}

void StreamWriter::end_cycle() {
  if (section_ != 0 || cycles_done_ >= num_cycles_) throw InvalidArgument("all cycles already written");
  if (in_cycle_ != cycle_len_) {
    throw InvalidArgument("cycle has " + std::to_string(in_cycle_) + " steps, declared " +
                          std::to_string(cycle_len_));
  }
  out_ << '\n';
  in_cycle_ = 0;
  ++cycles_done_;
}

void StreamWriter::require_cycles_done() const {
  if (cycles_done_ != num_cycles_ || in_cycle_ != 0) {
    throw InvalidArgument("wrote " + std::to_string(cycles_done_) + " of " +
                          std::to_string(num_cycles_) + " cycles");
  }
}

void StreamWriter::write_matrix(const SourceMatrix& m) {
  require_cycles_done();
  if (section_ >= 1) throw InvalidArgument("MATRIX must come once, before MSET");
  write_matrix_lines(out_, m);
  section_ = 1;
}

void StreamWriter::write_merging_set(const MergingSet& s) {
  require_cycles_done();
  if (section_ >= 2) throw InvalidArgument("MSET written twice");
  write_mset_lines(out_, s);
  section_ = 2;
}

void StreamWriter::finish() {
  require_cycles_done();
  out_.flush();
}

}  // namespace hdq
