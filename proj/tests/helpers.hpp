#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aglab/morphisms.hpp"
#include "aglab/table_io.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(AGLAB_FIXTURES_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline aglab::FiniteGroupoid load_fixture(const std::string& name) {
    return aglab::parse_table(read_file(fixture_path(name)));
}

// (a, b) -> a + b mod n.
inline aglab::FiniteGroupoid mod_add(int n) {
    std::vector<int> flat(n * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) flat[a * n + b] = (a + b) % n;
    }
    return aglab::FiniteGroupoid(n, flat);
}

// (a, b) -> b - a mod n.
inline aglab::FiniteGroupoid mod_sub(int n) {
    std::vector<int> flat(n * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) flat[a * n + b] = ((b - a) % n + n) % n;
    }
    return aglab::FiniteGroupoid(n, flat);
}

// x * y = x.
inline aglab::FiniteGroupoid left_zero(int n) {
    std::vector<int> flat(n * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) flat[a * n + b] = a;
    }
    return aglab::FiniteGroupoid(n, flat);
}

// x * y = y.
inline aglab::FiniteGroupoid right_zero(int n) {
    std::vector<int> flat(n * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) flat[a * n + b] = b;
    }
    return aglab::FiniteGroupoid(n, flat);
}

// The Klein four-group: x * y = x XOR y.
inline aglab::FiniteGroupoid klein4() {
    std::vector<int> flat(16);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) flat[a * 4 + b] = a ^ b;
    }
    return aglab::FiniteGroupoid(4, flat);
}

inline aglab::Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i;
    std::shuffle(images.begin(), images.end(), rng);
    return aglab::Permutation(images);
}

// Independent oracle predicates on raw tables: plain loops, no library
// machinery, used to pin down expected values before trusting the library.
namespace oracle {

using Table = std::vector<std::vector<int>>;

inline Table rows_of(const aglab::FiniteGroupoid& g) {
    Table t(g.order(), std::vector<int>(g.order()));
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) t[a][b] = g.at(a, b);
    }
    return t;
}

inline bool invertive(const Table& t) {
    const int n = static_cast<int>(t.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t[t[x][y]][z] != t[t[z][y]][x]) return false;
    return true;
}

inline bool agss_identity(const Table& t) {
    const int n = static_cast<int>(t.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t[x][t[y][z]] != t[y][t[x][z]]) return false;
    return true;
}

inline bool medial(const Table& t) {
    const int n = static_cast<int>(t.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w)
                    if (t[t[x][y]][t[z][w]] != t[t[x][z]][t[y][w]]) return false;
    return true;
}

inline bool paramedial(const Table& t) {
    const int n = static_cast<int>(t.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w)
                    if (t[t[x][y]][t[z][w]] != t[t[w][y]][t[z][x]]) return false;
    return true;
}

inline bool has_left_identity(const Table& t) {
    const int n = static_cast<int>(t.size());
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n; ++x) ok = ok && t[e][x] == x;
        if (ok) return true;
    }
    return false;
}

// Unique commuting mutual inverse for every element.
inline bool completely_inverse(const Table& t) {
    const int n = static_cast<int>(t.size());
    for (int a = 0; a < n; ++a) {
        int count = 0;
        bool commutes = false;
        for (int b = 0; b < n; ++b) {
            if (t[t[a][b]][a] == a && t[t[b][a]][b] == b) {
                ++count;
                commutes = t[a][b] == t[b][a];
            }
        }
        if (count != 1 || !commutes) return false;
    }
    return true;
}

inline bool cia(const Table& t) {
    return invertive(t) && agss_identity(t) && completely_inverse(t);
}

}  // namespace oracle

}  // namespace testutil
