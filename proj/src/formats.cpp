#include "thmat/formats.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "thmat/error.hpp"

namespace thmat::formats {

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::string_view next() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    std::string_view line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
  }

  void expect_end() {
    while (pos_ < text_.size()) {
      std::string_view rest = next();
      if (rest.find_first_not_of(" \t") != std::string_view::npos) fail("trailing content");
    }
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::Parse, "line " + std::to_string(line_no_) + ": " + why);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_u64(std::string_view tok, std::uint64_t& out) {
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::uint64_t keyed(LineReader& in, std::string_view key) {
  const auto tok = tokens(in.next());
  std::uint64_t v = 0;
  if (tok.size() != 2 || tok[0] != key || !parse_u64(tok[1], v))
    in.fail("expected '" + std::string(key) + " <integer>'");
  return v;
}

Vec residues(LineReader& in, const PrimeField& f, std::size_t n) {
  const auto tok = tokens(in.next());
  if (tok.size() != n) in.fail("expected " + std::to_string(n) + " residues, got " + std::to_string(tok.size()));
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t x = 0;
    if (!parse_u64(tok[i], x) || x >= f.modulus()) in.fail("bad residue '" + std::string(tok[i]) + "'");
    v[i] = Fe(x);
  }
  return v;
}

void header(LineReader& in, std::string_view magic) {
  const auto tok = tokens(in.next());
  if (tok.size() != 2 || tok[0] != magic || tok[1] != "1")
    in.fail("expected '" + std::string(magic) + " 1' header");
}

PrimeField field_line(LineReader& in) {
  const std::uint64_t p = keyed(in, "field");
  try {
    return PrimeField(p);
  } catch (const Error& e) {
    in.fail(e.what());
  }
}

std::size_t size_line(LineReader& in) {
  const std::uint64_t n = keyed(in, "size");
  if (n == 0) in.fail("size must be positive");
  if (n > (1u << 24)) in.fail("size too large");
  return static_cast<std::size_t>(n);
}

void put_vec(std::ostringstream& os, std::span<const Fe> v) {
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].v;
  os << '\n';
}

ToeplitzLikeCore read_part(LineReader& in, std::string_view key, const PrimeField& f, std::size_t n) {
  const std::uint64_t alpha = keyed(in, key);
  if (alpha > (1u << 20)) in.fail("implausible generator width");
  std::vector<Vec> g, h;
  for (std::uint64_t j = 0; j < alpha; ++j) g.push_back(residues(in, f, n));
  for (std::uint64_t j = 0; j < alpha; ++j) h.push_back(residues(in, f, n));
  return ToeplitzLikeCore(GeneratorPair(f, n, std::move(g), std::move(h)));
}

void write_part(std::ostringstream& os, std::string_view key, const ToeplitzLikeCore& c) {
  os << key << ' ' << c.width() << '\n';
  for (const Vec& col : c.gen().g()) put_vec(os, col);
  for (const Vec& col : c.gen().h()) put_vec(os, col);
}

}  // namespace

std::string write_smx(const THMatrix& a) {
  std::ostringstream os;
  os << "SMX 1\nfield " << a.field().modulus() << "\nsize " << a.n() << '\n';
  write_part(os, "tpart", a.p());
  write_part(os, "hpart", a.q());
  return os.str();
}

THMatrix read_smx(std::string_view text) {
  LineReader in(text);
  header(in, "SMX");
  const PrimeField f = field_line(in);
  const std::size_t n = size_line(in);
  ToeplitzLikeCore p = read_part(in, "tpart", f, n);
  ToeplitzLikeCore q = read_part(in, "hpart", f, n);
  in.expect_end();
  return THMatrix(std::move(p), std::move(q));
}

std::string write_dmx(const DenseMatrix& a) {
  std::ostringstream os;
  os << "DMX 1\nfield " << a.field().modulus() << "\nsize " << a.rows() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) put_vec(os, a.row(i));
  return os.str();
}

DenseMatrix read_dmx(std::string_view text) {
  LineReader in(text);
  header(in, "DMX");
  const PrimeField f = field_line(in);
  const std::size_t n = size_line(in);
  DenseMatrix a(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec row = residues(in, f, n);
    for (std::size_t j = 0; j < n; ++j) a(i, j) = row[j];
  }
  in.expect_end();
  return a;
}

std::string write_poly_line(const Poly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.coeffs()[i].v);
  }
  return out;
}

Poly read_poly_line(const PrimeField& f, std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  Vec c;
  for (auto tok : tokens(line)) {
    std::uint64_t x = 0;
    if (!parse_u64(tok, x) || x >= f.modulus())
      throw Error(Errc::Parse, "bad polynomial coefficient '" + std::string(tok) + "'");
    c.push_back(Fe(x));
  }
  return Poly(f, std::move(c));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Parse, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(Errc::Parse, "write failed for " + path.string());
}

}  // namespace thmat::formats
