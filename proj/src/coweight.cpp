#include "iwahori/coweight.hpp"

#include <charconv>
#include <sstream>

#include "iwahori/errors.hpp"

namespace iwahori {

Coweight Coweight::zero(std::size_t rank) {
  if (rank > kMaxRank) {
    throw Error("coweight rank exceeds kMaxRank");
  }
  Coweight mu;
  mu.rank_ = static_cast<std::uint8_t>(rank);
  return mu;
}

Coweight::Coweight(std::initializer_list<int> coords)
    : Coweight(std::span<const int>(coords.begin(), coords.size())) {}

Coweight::Coweight(std::span<const int> coords) : Coweight(zero(coords.size())) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords_[i] = coords[i];
}

std::vector<int> Coweight::coords() const {
  return {coords_.begin(), coords_.begin() + rank_};
}

bool Coweight::is_zero() const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (coords_[i] != 0) return false;
  return true;
}

bool Coweight::is_dominant() const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (coords_[i] < 0) return false;
  return true;
}

int Coweight::height() const {
  int h = 0;
  for (std::size_t i = 0; i < rank_; ++i) h += coords_[i];
  return h;
}

Coweight& Coweight::operator+=(const Coweight& o) {
  for (std::size_t i = 0; i < kMaxRank; ++i) coords_[i] += o.coords_[i];
  return *this;
}

Coweight& Coweight::operator-=(const Coweight& o) {
  for (std::size_t i = 0; i < kMaxRank; ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Coweight& Coweight::operator*=(int k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

Coweight Coweight::operator-() const {
  Coweight r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

std::string Coweight::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + "]";
}

Coweight parse_coweight(const std::string& text, std::size_t rank) {
  std::vector<int> vals;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    auto b = token.find_first_not_of(" \t");
    auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty coordinate in coweight '" + text + "'");
    token = token.substr(b, e - b + 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("bad integer '" + token + "' in coweight '" + text + "'");
    }
    vals.push_back(v);
  }
  if (vals.size() != rank) {
    throw ParseError("coweight '" + text + "' has " + std::to_string(vals.size()) +
                     " coordinates, expected " + std::to_string(rank));
  }
  return Coweight(std::span<const int>(vals));
}

std::size_t CoweightHash::operator()(const Coweight& mu) const noexcept {
  std::size_t h = mu.rank();
  for (std::size_t i = 0; i < mu.rank(); ++i) {
    h ^= static_cast<std::size_t>(mu[i] + 0x9e3779b9) + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace iwahori
