#include "c34/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "c34/error.hpp"

namespace c34 {

namespace {

constexpr std::array<std::string_view, 7> kKeys = {"p", "p2", "p1", "p0", "q2", "q1", "q0"};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Curve parse_curve(std::string_view text) {
  std::map<std::string, std::uint64_t, std::less<>> vals;
  std::size_t lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "curve line " + std::to_string(lineno);
    if (eq == std::string_view::npos) throw Error(Errc::InvalidInput, where + ": expected key=value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view val = trim(line.substr(eq + 1));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw Error(Errc::InvalidInput, where + ": unknown key '" + std::string(key) + "'");
    }
    if (vals.count(key)) {
      throw Error(Errc::InvalidInput, where + ": repeated key '" + std::string(key) + "'");
    }
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (val.empty() || ec != std::errc{} || ptr != val.data() + val.size()) {
      throw Error(Errc::InvalidInput, where + ": bad value '" + std::string(val) + "'");
    }
    vals.emplace(std::string(key), v);
  }
  for (const auto key : kKeys) {
    if (!vals.count(key)) throw Error(Errc::InvalidInput, "curve file lacks '" + std::string(key) + "'");
  }
  const FieldCtx field(vals.find("p")->second);
  auto coeff = [&](std::string_view key) {
    const std::uint64_t v = vals.find(key)->second;
    if (v >= field.modulus()) {
      throw Error(Errc::InvalidInput, "curve coefficient " + std::string(key) + " is not a residue mod p");
    }
    return Element{v};
  };
  return Curve(field, CurveCoeffs{coeff("p2"), coeff("p1"), coeff("p0"), coeff("q2"), coeff("q1"),
                                  coeff("q0")});
}

std::string format_curve(const Curve& curve) {
  std::ostringstream os;
  const CurveCoeffs& k = curve.coeffs();
  os << "p=" << curve.modulus() << '\n'
     << "p2=" << k.p2 << '\n'
     << "p1=" << k.p1 << '\n'
     << "p0=" << k.p0 << '\n'
     << "q2=" << k.q2 << '\n'
     << "q1=" << k.q1 << '\n'
     << "q0=" << k.q0 << '\n';
  return os.str();
}

Curve load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot read curve file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_curve(buf.str());
}

}  // namespace c34
