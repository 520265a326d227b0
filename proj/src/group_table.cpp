/*
   Copyright 2026 The hopfkernel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hopfkernel/group_table.hpp"

#include <algorithm>
#include <map>

#include "hopfkernel/errors.hpp"
#include "hopfkernel/instance_io.hpp"

namespace hopfkernel {

namespace {

void check_table(const std::vector<std::string>& labels,
                 const std::vector<std::vector<std::size_t>>& mul, bool check_associativity) {
    const std::size_t n = labels.size();
    if (n == 0) throw StructuralError("group has no elements");
    if (mul.size() != n) throw StructuralError("multiplication table has the wrong number of rows");
    for (std::size_t a = 0; a < n; ++a) {
        if (mul[a].size() != n)
            throw StructuralError("multiplication table row " + std::to_string(a) +
                                  " has the wrong length");
        for (auto v : mul[a])
            if (v >= n) throw StructuralError("multiplication table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        if (mul[0][a] != a || mul[a][0] != a)
            throw StructuralError("index 0 is not an identity (fails at element " + labels[a] + ")");
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<char> row(n, 0), col(n, 0);
        for (std::size_t b = 0; b < n; ++b) {
            if (row[mul[a][b]]++) throw StructuralError("row of " + labels[a] + " is not a permutation");
            if (col[mul[b][a]]++)
                throw StructuralError("column of " + labels[a] + " is not a permutation");
        }
    }
    if (!check_associativity) return;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw StructuralError("non-associative triple (" + labels[a] + ", " + labels[b] +
                                          ", " + labels[c] + ")");
}

std::vector<std::size_t> inverses(const std::vector<std::vector<std::size_t>>& mul) {
    const std::size_t n = mul.size();
    std::vector<std::size_t> inv(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (mul[a][b] == 0) inv[a] = b;
    return inv;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

}  // namespace

GroupTable::GroupTable(std::string name, std::vector<std::string> labels,
                       std::vector<std::vector<std::size_t>> mul)
    : name_(std::move(name)), labels_(std::move(labels)), mul_(std::move(mul)) {
    check_table(labels_, mul_, true);
    inv_ = inverses(mul_);
    embedding_.resize(labels_.size());
    for (std::size_t i = 0; i < embedding_.size(); ++i) embedding_[i] = i;
}

GroupTable GroupTable::from_generators(std::string name, const std::vector<Permutation>& gens,
                                       std::vector<std::string> names, std::size_t max_order) {
    const std::size_t points = gens.empty() ? 0 : gens.front().size();
    for (const auto& g : gens) {
        if (g.size() != points) throw StructuralError("generators act on different point sets");
        std::vector<char> hit(points, 0);
        for (auto x : g) {
            if (x >= points || hit[x]++)
                throw StructuralError("generator is not a permutation of 0.." +
                                      std::to_string(points ? points - 1 : 0));
        }
    }
    if (names.empty())
        for (std::size_t i = 0; i < gens.size(); ++i) names.push_back(std::string(1, char('a' + i % 26)));
    if (names.size() != gens.size())
        throw StructuralError("generator_names has the wrong length");
    const bool short_names =
        std::all_of(names.begin(), names.end(), [](const auto& s) { return s.size() == 1; });

    Permutation id(points);
    for (std::size_t i = 0; i < points; ++i) id[i] = i;
    std::vector<Permutation> elems{id};
    std::vector<std::string> labels{"e"};
    std::map<Permutation, std::size_t> index{{id, 0}};
    for (std::size_t q = 0; q < elems.size(); ++q) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            auto y = compose(elems[q], gens[g]);
            if (index.contains(y)) continue;
            if (elems.size() >= max_order)
                throw StructuralError("generator closure exceeds the bound of " +
                                      std::to_string(max_order) + " elements");
            index.emplace(y, elems.size());
            const std::string& base = labels[q];
            labels.push_back(q == 0 ? names[g] : base + (short_names ? "" : "*") + names[g]);
            elems.push_back(std::move(y));
        }
    }
    const std::size_t n = elems.size();
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mul[a][b] = index.at(compose(elems[a], elems[b]));

    // Permutation composition is associative; only the cheap checks run here.
    check_table(labels, mul, false);
    GroupTable g(std::move(name), {"e"}, {{0}});
    g.labels_ = std::move(labels);
    g.mul_ = std::move(mul);
    g.inv_ = inverses(g.mul_);
    g.embedding_.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.embedding_[i] = i;
    return g;
}

GroupTable GroupTable::subgroup(const std::vector<std::size_t>& elements) const {
    std::vector<std::size_t> order{0};
    for (auto e : elements) {
        if (e >= this->order()) throw InvalidArgument("subgroup element out of range");
        if (e != 0 && std::find(order.begin(), order.end(), e) == order.end()) order.push_back(e);
    }
    if (std::find(elements.begin(), elements.end(), std::size_t{0}) == elements.end())
        throw InvalidArgument("subgroup does not contain the identity");
    std::vector<std::size_t> pos(this->order(), this->order());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    const std::size_t n = order.size();
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(labels_[order[a]]);
        for (std::size_t b = 0; b < n; ++b) {
            const auto c = pos[mul_[order[a]][order[b]]];
            if (c == this->order()) throw InvalidArgument("subgroup is not closed");
            mul[a][b] = c;
        }
    }
    check_table(labels, mul, false);
    GroupTable g(name_ + "-sub", {"e"}, {{0}});
    g.labels_ = std::move(labels);
    g.mul_ = std::move(mul);
    g.inv_ = inverses(g.mul_);
    g.embedding_.clear();
    for (auto e : order) g.embedding_.push_back(embedding_[e]);
    return g;
}

std::size_t GroupTable::element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != 0; x = mul_[x][a]) ++k;
    return k;
}

GroupTable parse_group(const nlohmann::json& doc, std::size_t max_order) {
    try {
        if (!doc.is_object()) throw StructuralError("group document must be an object");
        const std::string name = doc.value("name", std::string("group"));
        if (doc.contains("generators")) {
            std::vector<Permutation> gens;
            for (const auto& g : doc.at("generators")) gens.push_back(g.get<Permutation>());
            std::vector<std::string> names;
            if (doc.contains("generator_names"))
                names = doc.at("generator_names").get<std::vector<std::string>>();
            return GroupTable::from_generators(name, gens, std::move(names), max_order);
        }
        if (doc.contains("cayley")) {
            auto mul = doc.at("cayley").get<std::vector<std::vector<std::size_t>>>();
            std::vector<std::string> labels;
            if (doc.contains("labels")) {
                labels = doc.at("labels").get<std::vector<std::string>>();
            } else {
                for (std::size_t i = 0; i < mul.size(); ++i)
                    labels.push_back(i == 0 ? "e" : "g" + std::to_string(i));
            }
            if (labels.size() != mul.size()) throw StructuralError("labels has the wrong length");
            if (mul.size() > max_order)
                throw StructuralError("Cayley table exceeds the bound of " +
                                      std::to_string(max_order) + " elements");
            return GroupTable(name, std::move(labels), std::move(mul));
        }
        throw StructuralError("group document needs 'generators' or 'cayley'");
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("malformed group document: ") + e.what());
    }
}

GroupTable read_group_file(const std::filesystem::path& path, std::size_t max_order) {
    return parse_group(read_json_file(path), max_order);
}

}  // namespace hopfkernel
