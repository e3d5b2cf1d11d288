#include "qextremal/family_io.hpp"

#include "qextremal/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace qx {

void write_family(const Family &f, std::ostream &out) {
  out << f.field()->q() << ' ' << f.ambient() << ' ' << f.size() << '\n';
  for (std::size_t b = 0; b < f.size(); ++b) {
    if (b > 0)
      out << '\n';
    const auto &s = f[b];
    out << s.dim() << '\n';
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t j = 0; j < s.ambient(); ++j)
        out << (j ? " " : "") << static_cast<int>(s.basis().at(i, j));
      out << '\n';
    }
  }
}

std::string format_family(const Family &f) {
  std::ostringstream out;
  write_family(f, out);
  return out.str();
}

void write_family_file(const Family &f, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_family(f, out);
  out.flush();
  if (!out)
    throw std::runtime_error("write to " + path.string() + " failed");
}

namespace {

struct Line {
  std::size_t number;
  std::vector<long long> values;
};

/// Non-blank, non-comment lines as integer tuples.
std::vector<Line> tokenize(std::istream &in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r')
      text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#')
      continue;
    Line line{number, {}};
    std::istringstream fields(text);
    std::string token;
    while (fields >> token) {
      long long v = 0;
      const auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size() || v < 0)
        throw ParseError(number, "expected a nonnegative integer, got '" +
                                     token + "'");
      line.values.push_back(v);
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

} // namespace

Family parse_family(std::istream &in, int max_order) {
  const auto lines = tokenize(in);
  if (lines.empty())
    throw ParseError(1, "missing header 'q n m'");
  const auto &header = lines.front();
  if (header.values.size() != 3)
    throw ParseError(header.number, "header must be 'q n m'");
  const long long q = header.values[0];
  const auto n = static_cast<std::size_t>(header.values[1]);
  const auto m = static_cast<std::size_t>(header.values[2]);
  FieldRef field;
  try {
    field = make_field(q, max_order);
  } catch (const Error &e) {
    throw ParseError(header.number, e.what());
  }
  if (n < 1)
    throw ParseError(header.number, "ambient dimension must be >= 1");

  std::vector<Subspace> members;
  std::size_t cursor = 1;
  for (std::size_t b = 0; b < m; ++b) {
    if (cursor >= lines.size())
      throw ParseError(lines.back().number,
                       "expected " + std::to_string(m) + " blocks, found " +
                           std::to_string(b));
    const auto &head = lines[cursor++];
    if (head.values.size() != 1 || head.values[0] > static_cast<long long>(n))
      throw ParseError(head.number, "block header must be a dimension 0.." +
                                        std::to_string(n));
    const auto k = static_cast<std::size_t>(head.values[0]);
    std::vector<Elem> entries;
    for (std::size_t r = 0; r < k; ++r) {
      if (cursor >= lines.size())
        throw ParseError(lines.back().number, "block " + std::to_string(b) +
                                                  " is missing rows");
      const auto &row = lines[cursor++];
      if (row.values.size() != n)
        throw ParseError(row.number, "row must have " + std::to_string(n) +
                                         " entries");
      for (auto v : row.values) {
        if (v >= q)
          throw ParseError(row.number, "code " + std::to_string(v) +
                                           " is not an element of F_" +
                                           std::to_string(q));
        entries.push_back(static_cast<Elem>(v));
      }
    }
    auto s = Subspace::from_rref(MatrixFq(field, k, n, std::move(entries)));
    if (!s)
      throw NotCanonical(b, head.number);
    members.push_back(std::move(*s));
  }
  if (cursor < lines.size())
    throw ParseError(lines[cursor].number, "unexpected content after " +
                                               std::to_string(m) + " blocks");
  return Family(field, n, std::move(members));
}

Family read_family_file(const std::filesystem::path &path, int max_order) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  return parse_family(in, max_order);
}

} // namespace qx
