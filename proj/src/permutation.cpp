#include "symskew/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace symskew {

namespace {

std::vector<int> invert_row(const std::vector<int>& row) {
    const int d = static_cast<int>(row.size());
    std::vector<int> inv(d, -1);
    for (int s = 0; s < d; ++s) {
        if (row[s] < 0 || row[s] >= d || inv[row[s]] != -1)
            throw NotBijective("permutation row is not a bijection");
        inv[row[s]] = s;
    }
    return inv;
}

std::vector<int> parse_positions(const std::string& part) {
    std::vector<int> out;
    std::stringstream ss(part);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok) - 1);
    return out;
}

} // namespace

Permutation::Permutation(std::vector<int> pi0, std::vector<int> pi1)
    : d_(static_cast<int>(pi0.size())), pi0_(std::move(pi0)), pi1_(std::move(pi1)) {
    if (d_ < 2) throw Error("alphabet must have at least 2 symbols");
    if (static_cast<int>(pi1_.size()) != d_)
        throw NotBijective("permutation rows have different sizes");
    top_at_ = invert_row(pi0_);
    bot_at_ = invert_row(pi1_);
}

Permutation Permutation::symmetric(int d) {
    std::vector<int> pi0(d), pi1(d);
    for (int s = 0; s < d; ++s) {
        pi0[s] = s;
        pi1[s] = d - 1 - s;
    }
    return Permutation(std::move(pi0), std::move(pi1));
}

bool Permutation::is_symmetric() const {
    for (int k = 0; k < d_; ++k)
        if (pi1_[top_at_[k]] != d_ - 1 - k) return false;
    return true;
}

bool Permutation::is_irreducible() const {
    // pi1 o pi0^{-1}({1..k}) == {1..k} iff max over the prefix equals k.
    int running_max = -1;
    for (int k = 0; k < d_ - 1; ++k) {
        running_max = std::max(running_max, pi1_[top_at_[k]]);
        if (running_max == k) return false;
    }
    return true;
}

Permutation Permutation::canonical() const {
    // New symbol of old symbol s is pos0(s); pi0 becomes the identity.
    std::vector<int> pi0(d_), pi1(d_);
    for (int s = 0; s < d_; ++s) {
        pi0[pi0_[s]] = pi0_[s];
        pi1[pi0_[s]] = pi1_[s];
    }
    return Permutation(std::move(pi0), std::move(pi1));
}

std::string Permutation::to_string() const {
    std::string out;
    for (int s = 0; s < d_; ++s) out += (s ? "," : "") + std::to_string(pi0_[s] + 1);
    out += "|";
    for (int s = 0; s < d_; ++s) out += (s ? "," : "") + std::to_string(pi1_[s] + 1);
    return out;
}

Permutation Permutation::from_string(const std::string& s) {
    auto bar = s.find('|');
    if (bar == std::string::npos) throw Error("permutation literal needs 'top|bottom': " + s);
    return Permutation(parse_positions(s.substr(0, bar)), parse_positions(s.substr(bar + 1)));
}

} // namespace symskew
