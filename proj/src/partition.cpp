#include "macfock/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace macfock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::string trimmed;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed == "[]") return Partition();
    if (trimmed.front() == '[' && trimmed.back() == ']') trimmed = trimmed.substr(1, trimmed.size() - 2);
    std::stringstream ss(trimmed);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty partition part");
        std::size_t used = 0;
        int p = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad partition part: " + tok);
        parts.push_back(p);
    }
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(static_cast<std::size_t>(parts_[0]));
        for (int j = 1; j <= parts_[0]; ++j) {
            int count = 0;
            for (int p : parts_)
                if (p >= j) ++count;
            cols[static_cast<std::size_t>(j - 1)] = count;
        }
    }
    return Partition(std::move(cols));
}

bool Partition::has_cell(int i, int j) const { return i >= 1 && i <= length() && j >= 1 && j <= part(i); }

int Partition::arm(int i, int j) const {
    if (!has_cell(i, j)) throw std::out_of_range("cell outside the diagram");
    return part(i) - j;
}

int Partition::leg(int i, int j) const {
    if (!has_cell(i, j)) throw std::out_of_range("cell outside the diagram");
    int count = 0;
    for (int r = i + 1; r <= length(); ++r)
        if (part(r) >= j) ++count;
    return count;
}

int Partition::nstat() const {
    int n = 0;
    for (int i = 1; i <= length(); ++i) n += (i - 1) * part(i);
    return n;
}

Int Partition::zcent() const {
    Int z(1);
    int mult = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        ++mult;
        z *= parts_[i];
        if (i + 1 == parts_.size() || parts_[i + 1] != parts_[i]) {
            for (int f = 2; f <= mult; ++f) z *= f;
            mult = 0;
        } else {
            // same part continues
        }
    }
    return z;
}

long Partition::sum_squares() const {
    long s = 0;
    for (int p : parts_) s += static_cast<long>(p) * p;
    return s;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

bool Partition::dominated_by(const Partition& o) const {
    if (size_ != o.size_) return false;
    int a = 0, b = 0;
    int len = std::max(length(), o.length());
    for (int i = 1; i <= len; ++i) {
        a += part(i);
        b += o.part(i);
        if (a > b) return false;
    }
    return true;
}

bool Partition::operator<(const Partition& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    // reverse-lexicographic: the partition with the larger first differing part comes first
    std::size_t n = std::min(parts_.size(), o.parts_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (parts_[i] != o.parts_[i]) return parts_[i] > o.parts_[i];
    return parts_.size() < o.parts_.size();
}

std::string Partition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

namespace {

void gen(int remaining, int max_part, std::vector<int>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        gen(remaining - p, p, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> stack;
    gen(n, n == 0 ? 1 : n, stack, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int d = 0; d <= n; ++d) {
        auto pd = partitions_of(d);
        out.insert(out.end(), pd.begin(), pd.end());
    }
    return out;
}

}  // namespace macfock
