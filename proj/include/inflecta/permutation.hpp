#pragma once

#include <string>
#include <vector>

namespace inflecta {

// Bijection of {0, ..., n-1}. images[i] is where i goes.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// fixed convention: apply b first, then a; result[i] = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
Permutation power(const Permutation& a, int e);

// multiset of cycle lengths, sorted descending; lengths sum to the degree
std::vector<int> cycle_type(const Permutation& a);

// "3^2 1^18" style rendering of a cycle type, for reports
std::string cycle_type_string(const std::vector<int>& type);

} // namespace inflecta
