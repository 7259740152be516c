#include "blockext/spec_file.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "blockext/errors.hpp"

namespace blockext {

namespace {

struct Cursor {
  const std::string& source;
  int line;

  [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
    throw Error(Errc::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(column + 1) + ": " + msg);
  }
};

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return i;
}

std::size_t trim_end(std::string_view s, std::size_t end) {
  while (end > 0 && (s[end - 1] == ' ' || s[end - 1] == '\t' || s[end - 1] == '\r')) --end;
  return end;
}

// Whitespace separated integers starting at `col` of the original line.
std::vector<std::int64_t> integers(const Cursor& c, std::string_view line, std::size_t col, std::size_t end) {
  std::vector<std::int64_t> out;
  std::size_t i = skip_space(line, col);
  while (i < end) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + end, v);
    const std::size_t stop = static_cast<std::size_t>(ptr - line.data());
    if (ec != std::errc() || (stop < end && line[stop] != ' ' && line[stop] != '\t')) c.fail(i, "expected an integer");
    out.push_back(v);
    i = skip_space(line, stop);
  }
  return out;
}

std::int64_t one_integer(const Cursor& c, std::string_view line, std::size_t col, std::size_t end) {
  auto v = integers(c, line, col, end);
  if (v.size() != 1) c.fail(col, "expected exactly one integer");
  return v.front();
}

bool boolean(const Cursor& c, std::string_view line, std::size_t col, std::size_t end) {
  const std::string_view v = line.substr(col, end - col);
  if (v == "true") return true;
  if (v == "false") return false;
  c.fail(col, "expected true or false");
}

ActionMatrix matrix(const Cursor& c, std::string_view line, std::size_t col, std::size_t end) {
  ActionMatrix m;
  std::size_t start = col;
  for (std::size_t i = col; i <= end; ++i)
    if (i == end || line[i] == ';') {
      auto row = integers(c, line, start, i);
      if (row.empty() && (i != end || !m.empty())) c.fail(start, "empty matrix row");
      if (!row.empty()) m.push_back(std::move(row));
      start = i + 1;
    }
  for (const auto& row : m)
    if (row.size() != m.size()) c.fail(col, "action matrix must be square");
  return m;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

bool operator==(const SpecFile& a, const SpecFile& b) {
  const BlockSpec &x = a.spec, &y = b.spec;
  return a.format == b.format && a.name == b.name && a.precision == b.precision && a.enum_bound == b.enum_bound &&
         a.size_guard == b.size_guard && x.p == y.p && x.exponents == y.exponents && x.generators == y.generators &&
         x.actions == y.actions && x.phi == y.phi && x.order_bound == y.order_bound &&
         x.allow_c2_factors == y.allow_c2_factors;
}

SpecFile parse_spec(std::string_view text, const std::string& source) {
  SpecFile s;
  enum class Section { Top, Generator, Options } section = Section::Top;
  std::set<std::string> seen_top, seen_options, seen_gen;
  bool have_p = false, have_exponents = false, have_format = false, have_options = false;
  std::optional<Perm> perm;
  std::optional<ActionMatrix> action;
  int gen_line = 0;

  auto close_generator = [&](const Cursor& c) {
    if (section != Section::Generator) return;
    if (!perm || !action) {
      Cursor g{source, gen_line};
      g.fail(0, perm ? "generator without action" : "generator without perm");
    }
    s.spec.generators.push_back(std::move(*perm));
    s.spec.actions.push_back(std::move(*action));
    perm.reset();
    action.reset();
    (void)c;
  };

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    Cursor c{source, lineno};

    std::size_t end = line.find('#');
    end = trim_end(line, end == std::string_view::npos ? line.size() : end);
    const std::size_t begin = skip_space(line, 0);
    if (begin >= end) continue;

    if (line[begin] == '[') {
      if (line[end - 1] != ']') c.fail(end - 1, "expected ']'");
      const std::string_view name = line.substr(begin + 1, end - begin - 2);
      close_generator(c);
      if (name == "generator") {
        section = Section::Generator;
        seen_gen.clear();
        gen_line = lineno;
      } else if (name == "options") {
        if (have_options) c.fail(begin, "duplicate [options] section");
        have_options = true;
        section = Section::Options;
      } else {
        c.fail(begin + 1, "unknown section '" + std::string(name) + "'");
      }
      continue;
    }

    const std::size_t eq = line.find('=', begin);
    if (eq == std::string_view::npos || eq >= end) c.fail(begin, "expected 'key = value'");
    const std::string key(line.substr(begin, trim_end(line, eq) - begin));
    const std::size_t vcol = skip_space(line, eq + 1);
    const std::size_t vend = std::max(vcol, end);
    auto& seen = section == Section::Top ? seen_top : section == Section::Options ? seen_options : seen_gen;
    if (!seen.insert(key).second) c.fail(begin, "duplicate key '" + key + "'");

    switch (section) {
      case Section::Top:
        if (key == "format") {
          s.format = static_cast<int>(one_integer(c, line, vcol, vend));
          if (s.format != 1) c.fail(vcol, "unsupported format " + std::to_string(s.format));
          have_format = true;
        } else if (key == "name") {
          s.name = std::string(line.substr(vcol, vend - vcol));
        } else if (key == "p") {
          s.spec.p = one_integer(c, line, vcol, vend);
          have_p = true;
        } else if (key == "exponents") {
          for (auto v : integers(c, line, vcol, vend)) s.spec.exponents.push_back(static_cast<int>(v));
          have_exponents = true;
        } else if (key == "phi") {
          s.spec.phi = one_integer(c, line, vcol, vend);
        } else if (key == "order_bound") {
          s.spec.order_bound = one_integer(c, line, vcol, vend);
        } else if (key == "allow_c2_factors") {
          s.spec.allow_c2_factors = boolean(c, line, vcol, vend);
        } else {
          c.fail(begin, "unknown key '" + key + "'");
        }
        break;
      case Section::Generator:
        if (key == "perm") {
          Perm p;
          for (auto v : integers(c, line, vcol, vend)) p.push_back(static_cast<int>(v));
          if (p.empty()) c.fail(vcol, "empty permutation");
          perm = std::move(p);
        } else if (key == "action") {
          action = matrix(c, line, vcol, vend);
        } else {
          c.fail(begin, "unknown key '" + key + "' in [generator]");
        }
        break;
      case Section::Options:
        if (key == "precision") {
          s.precision = static_cast<int>(one_integer(c, line, vcol, vend));
        } else if (key == "enum_bound") {
          s.enum_bound = one_integer(c, line, vcol, vend);
        } else if (key == "size_guard") {
          s.size_guard = one_integer(c, line, vcol, vend);
        } else {
          c.fail(begin, "unknown key '" + key + "' in [options]");
        }
        break;
    }
  }
  Cursor last{source, lineno};
  close_generator(last);
  if (!have_format) last.fail(0, "missing 'format'");
  if (!have_p) last.fail(0, "missing 'p'");
  if (!have_exponents) last.fail(0, "missing 'exponents'");
  return s;
}

SpecFile read_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str(), path.string());
}

std::string serialize_spec(const SpecFile& s) {
  std::ostringstream out;
  out << "format = " << s.format << "\n";
  if (!s.name.empty()) out << "name = " << s.name << "\n";
  out << "p = " << s.spec.p << "\n";
  out << "exponents = " << join(std::vector<std::int64_t>(s.spec.exponents.begin(), s.spec.exponents.end())) << "\n";
  if (s.spec.phi) out << "phi = " << *s.spec.phi << "\n";
  out << "order_bound = " << s.spec.order_bound << "\n";
  out << "allow_c2_factors = " << (s.spec.allow_c2_factors ? "true" : "false") << "\n";
  for (std::size_t g = 0; g < s.spec.generators.size(); ++g) {
    out << "\n[generator]\n";
    out << "perm = " << join(std::vector<std::int64_t>(s.spec.generators[g].begin(), s.spec.generators[g].end()))
        << "\n";
    out << "action = ";
    const auto& m = s.spec.actions[g];
    for (std::size_t r = 0; r < m.size(); ++r) out << (r ? "; " : "") << join(m[r]);
    out << "\n";
  }
  if (s.precision || s.enum_bound || s.size_guard) {
    out << "\n[options]\n";
    if (s.precision) out << "precision = " << *s.precision << "\n";
    if (s.enum_bound) out << "enum_bound = " << *s.enum_bound << "\n";
    if (s.size_guard) out << "size_guard = " << *s.size_guard << "\n";
  }
  return out.str();
}

std::string spec_hash(const SpecFile& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : serialize_spec(s)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace blockext
