#pragma once

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabcomb {

/// Effective curve class as a vector of nonnegative integers.
using ClassVector = std::vector<int>;

/// Free commutative monoid N^k with a positive degree functional L.  Models
/// the effective classes of a polarized variety: L . a >= 1 for nonzero a,
/// and each class has finitely many ordered decompositions.
struct CurveClassMonoid {
    int rank = 1;
    std::vector<long long> degree = {1};  // L, all entries >= 1

    CurveClassMonoid() = default;
    CurveClassMonoid(int r, std::vector<long long> deg) : rank(r), degree(std::move(deg)) {
        validate();
    }

    void validate() const {
        if (rank < 1) throw std::invalid_argument("monoid rank must be positive");
        if (static_cast<int>(degree.size()) != rank)
            throw std::invalid_argument("degree functional has wrong length");
        for (long long d : degree)
            if (d < 1) throw std::invalid_argument("degree functional must be positive");
    }

    ClassVector zero() const { return ClassVector(rank, 0); }

    bool is_effective(const ClassVector& a) const {
        if (static_cast<int>(a.size()) != rank) return false;
        for (int x : a)
            if (x < 0) return false;
        return true;
    }

    bool is_zero(const ClassVector& a) const {
        for (int x : a)
            if (x != 0) return false;
        return true;
    }

    long long degree_of(const ClassVector& a) const {
        long long d = 0;
        for (int i = 0; i < rank; ++i) d += degree[i] * a[i];
        return d;
    }

    ClassVector add(const ClassVector& a, const ClassVector& b) const {
        ClassVector c(rank);
        for (int i = 0; i < rank; ++i) c[i] = a[i] + b[i];
        return c;
    }

    /// All effective classes a with a <= beta componentwise.
    std::vector<ClassVector> classes_below(const ClassVector& beta) const {
        std::vector<ClassVector> out;
        ClassVector cur(rank, 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == rank) {
                out.push_back(cur);
                return;
            }
            for (int x = 0; x <= beta[i]; ++x) {
                cur[i] = x;
                rec(i + 1);
            }
            cur[i] = 0;
        };
        rec(0);
        return out;
    }

    static std::string to_string(const ClassVector& a) {
        std::ostringstream s;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i) s << ',';
            s << a[i];
        }
        return s.str();
    }

    static ClassVector parse(const std::string& s, int rank) {
        ClassVector a;
        std::istringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ',')) a.push_back(std::stoi(tok));
        if (static_cast<int>(a.size()) != rank)
            throw std::invalid_argument("class vector has wrong rank: " + s);
        return a;
    }
};

}  // namespace stabcomb
