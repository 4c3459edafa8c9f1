#include "connspace/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "connspace/generation.hpp"

namespace connspace {

PointMap PointMap::of(std::size_t source_size, std::size_t target_size,
                      std::vector<std::size_t> table) {
    if (table.size() != source_size)
        raise(Errc::bad_argument, "point map table does not match the source carrier");
    for (std::size_t v : table)
        if (v >= target_size) raise(Errc::invalid_point, "point map value outside the target");
    return PointMap{source_size, target_size, std::move(table)};
}

PointMap PointMap::identity(std::size_t n) {
    std::vector<std::size_t> table(n);
    std::iota(table.begin(), table.end(), std::size_t{0});
    return PointMap{n, n, std::move(table)};
}

PointMap PointMap::constant(std::size_t source_size, std::size_t target_size, std::size_t value) {
    if (value >= target_size) raise(Errc::invalid_point, "constant value outside the target");
    return PointMap{source_size, target_size, std::vector<std::size_t>(source_size, value)};
}

Subset PointMap::image(Subset s) const {
    Subset out;
    s.for_each_point([&](std::size_t p) { out = out.with(table[p]); });
    return out;
}

PointMap PointMap::then(const PointMap& next) const {
    if (target_size != next.source_size)
        raise(Errc::ground_mismatch, "composition endpoints do not match");
    std::vector<std::size_t> out(source_size);
    for (std::size_t p = 0; p < source_size; ++p) out[p] = next.table[table[p]];
    return PointMap{source_size, next.target_size, std::move(out)};
}

Partition Partition::of(std::size_t ground_size, std::vector<Subset> blocks) {
    Subset seen;
    for (Subset b : blocks) {
        if (b.is_empty()) raise(Errc::invalid_partition, "partition block is empty");
        if (b.intersects(seen)) raise(Errc::invalid_partition, "partition blocks overlap");
        seen = seen | b;
    }
    Subset full = ground_size == 0 ? Subset::empty()
                                   : Subset{(std::uint64_t{1} << ground_size) - 1};
    if (ground_size > 64) raise(Errc::size_limit_exceeded, "carrier size exceeds the 64-point cap");
    if (seen != full) raise(Errc::invalid_partition, "partition blocks do not cover the carrier");
    return Partition{ground_size, std::move(blocks)};
}

Partition Partition::merging(std::size_t ground_size,
                             const std::vector<std::vector<std::size_t>>& groups) {
    std::vector<std::size_t> parent(ground_size);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& group : groups) {
        for (std::size_t p : group) {
            if (p >= ground_size) raise(Errc::invalid_point, "merge point outside the carrier");
            parent[find(p)] = find(group.front());
        }
    }
    std::vector<Subset> by_root(ground_size);
    for (std::size_t p = 0; p < ground_size; ++p) {
        std::size_t r = find(p);
        by_root[r] = by_root[r].with(p);
    }
    std::vector<Subset> blocks;
    for (std::size_t p = 0; p < ground_size; ++p)
        if (!by_root[p].is_empty()) blocks.push_back(by_root[p]);
    std::sort(blocks.begin(), blocks.end(),
              [](Subset a, Subset b) { return a.min_point() < b.min_point(); });
    return Partition::of(ground_size, std::move(blocks));
}

std::size_t Partition::class_of(std::size_t p) const {
    for (std::size_t c = 0; c < blocks.size(); ++c)
        if (blocks[c].contains(p)) return c;
    raise(Errc::invalid_point, "point outside the partition");
}

PointMap Partition::class_map() const {
    std::vector<std::size_t> table(ground_size);
    for (std::size_t c = 0; c < blocks.size(); ++c)
        blocks[c].for_each_point([&](std::size_t p) { table[p] = c; });
    return PointMap{ground_size, blocks.size(), std::move(table)};
}

Diagram Diagram::of(std::vector<ConnSpace> objects, std::vector<Arrow> arrows) {
    for (std::size_t i = 1; i < objects.size(); ++i)
        if (objects[i].integral() != objects[0].integral())
            raise(Errc::ground_mismatch, "diagram objects mix integral flags");
    for (const Arrow& a : arrows) {
        if (a.source >= objects.size() || a.target >= objects.size())
            raise(Errc::bad_argument, "arrow endpoint outside the diagram");
        if (!is_morphism(a.map, objects[a.source], objects[a.target]))
            raise(Errc::not_morphism, "diagram arrow is not a morphism");
    }
    return Diagram{std::move(objects), std::move(arrows)};
}

bool is_morphism(const PointMap& f, const ConnSpace& x, const ConnSpace& y) {
    if (f.source_size != x.size() || f.target_size != y.size())
        raise(Errc::ground_mismatch, "map endpoints do not match the spaces");
    for (Subset k : x.structure().members()) {
        if (k.is_empty()) continue;
        if (!y.is_connected(f.image(k))) return false;
    }
    return true;
}

ConnSpace pushforward(const PointMap& f, const ConnSpace& x, const Limits& limits) {
    if (f.source_size != x.size())
        raise(Errc::ground_mismatch, "map source does not match the space");
    std::vector<Subset> images;
    images.reserve(x.structure().size());
    for (Subset k : x.structure().members()) images.push_back(f.image(k));
    return generate(GroundSet::of(f.target_size), SubsetFamily(std::move(images)), x.integral(),
                    limits);
}

ConnSpace pullback(const PointMap& f, std::size_t source_size, const ConnSpace& y,
                   const Limits& limits) {
    if (f.source_size != source_size || f.target_size != y.size())
        raise(Errc::ground_mismatch, "map endpoints do not match");
    check_carrier(source_size, limits);
    if (source_size >= 64)
        raise(Errc::size_limit_exceeded, "powerset enumeration needs fewer than 64 points");
    std::vector<Subset> members;
    std::uint64_t count = std::uint64_t{1} << source_size;
    for (std::uint64_t m = 0; m < count; ++m) {
        Subset s{m};
        if (y.is_connected(f.image(s))) {
            members.push_back(s);
            if (members.size() > limits.max_family)
                raise(Errc::family_size_limit_exceeded, "pullback exceeds the family limit");
        }
    }
    return ConnSpace::trusted(GroundSet::of(source_size), SubsetFamily(std::move(members)),
                              y.integral());
}

std::size_t pair_point(std::size_t i, std::size_t j, std::size_t second_size) {
    return i * second_size + j;
}

std::pair<std::size_t, std::size_t> pair_split(std::size_t p, std::size_t second_size) {
    return {p / second_size, p % second_size};
}

ConnSpace product(const ConnSpace& a, const ConnSpace& b, const Limits& limits) {
    if (a.integral() != b.integral())
        raise(Errc::ground_mismatch, "product requires matching integral flags");
    std::size_t n1 = a.size(), n2 = b.size();
    std::size_t carrier = n1 * n2;
    check_carrier(carrier, limits);

    if (carrier >= 64)
        raise(Errc::size_limit_exceeded, "powerset enumeration needs fewer than 64 points");

    std::uint64_t row_mask = n2 == 0 ? 0 : (std::uint64_t{1} << n2) - 1;
    std::vector<Subset> members;
    std::uint64_t count = std::uint64_t{1} << carrier;
    for (std::uint64_t m = 0; m < count; ++m) {
        Subset first, second;
        for (std::size_t i = 0; i < n1; ++i) {
            std::uint64_t row = (m >> (i * n2)) & row_mask;
            if (row != 0) first = first.with(i);
            second = Subset{second.bits | row};
        }
        if (a.is_connected(first) && b.is_connected(second)) {
            members.push_back(Subset{m});
            if (members.size() > limits.max_family)
                raise(Errc::family_size_limit_exceeded, "product exceeds the family limit");
        }
    }
    return ConnSpace::trusted(GroundSet::of(carrier), SubsetFamily(std::move(members)),
                              a.integral());
}

PointMap product_projection(const ConnSpace& a, const ConnSpace& b, std::size_t which) {
    std::size_t n1 = a.size(), n2 = b.size();
    std::vector<std::size_t> table(n1 * n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            table[pair_point(i, j, n2)] = (which == 0 ? i : j);
    return PointMap{n1 * n2, which == 0 ? n1 : n2, std::move(table)};
}

ConnSpace coproduct(const ConnSpace& a, const ConnSpace& b, const Limits& limits) {
    if (a.integral() != b.integral())
        raise(Errc::ground_mismatch, "coproduct requires matching integral flags");
    std::size_t carrier = a.size() + b.size();
    check_carrier(carrier, limits);
    std::vector<Subset> members;
    for (Subset k : a.structure().members()) members.push_back(k);
    for (Subset k : b.structure().members()) members.push_back(Subset{k.bits << a.size()});
    return ConnSpace::trusted(GroundSet::of(carrier), SubsetFamily(std::move(members)),
                              a.integral());
}

ConnSpace quotient(const ConnSpace& space, const Partition& partition, const Limits& limits) {
    if (partition.ground_size != space.size())
        raise(Errc::ground_mismatch, "partition does not match the carrier");
    return pushforward(partition.class_map(), space, limits);
}

ConnSpace subspace(const ConnSpace& space, Subset keep) {
    if (!space.ground().admits(keep))
        raise(Errc::bad_argument, "subspace carrier lies outside the space");
    std::vector<std::size_t> rank(space.size(), SIZE_MAX);
    std::size_t next = 0;
    keep.for_each_point([&](std::size_t p) { rank[p] = next++; });

    std::vector<Subset> members;
    for (Subset k : space.structure().members()) {
        if (!k.subset_of(keep)) continue;
        Subset reindexed;
        k.for_each_point([&](std::size_t p) { reindexed = reindexed.with(rank[p]); });
        members.push_back(reindexed);
    }
    return ConnSpace::trusted(GroundSet::of(keep.card()), SubsetFamily(std::move(members)),
                              space.integral());
}

Cocone colimit(const Diagram& diagram, const Limits& limits) {
    if (diagram.objects.empty())
        raise(Errc::bad_argument, "colimit needs at least one object");

    std::vector<std::size_t> offset(diagram.objects.size(), 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < diagram.objects.size(); ++i) {
        offset[i] = total;
        total += diagram.objects[i].size();
    }

    // Glue x to f(x) along every arrow; classes keep the order of their
    // least representative.
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (const Arrow& arrow : diagram.arrows) {
        const ConnSpace& src = diagram.objects[arrow.source];
        for (std::size_t p = 0; p < src.size(); ++p)
            unite(offset[arrow.source] + p, offset[arrow.target] + arrow.map(p));
    }

    std::vector<std::size_t> class_index(total, SIZE_MAX);
    std::size_t classes = 0;
    for (std::size_t v = 0; v < total; ++v)
        if (find(v) == v) class_index[v] = classes++;
    check_carrier(classes, limits);
    for (std::size_t v = 0; v < total; ++v) class_index[v] = class_index[find(v)];

    std::vector<PointMap> coprojections;
    std::vector<Subset> generators;
    for (std::size_t i = 0; i < diagram.objects.size(); ++i) {
        const ConnSpace& obj = diagram.objects[i];
        std::vector<std::size_t> table(obj.size());
        for (std::size_t p = 0; p < obj.size(); ++p) table[p] = class_index[offset[i] + p];
        PointMap c{obj.size(), classes, std::move(table)};
        for (Subset k : obj.structure().members()) generators.push_back(c.image(k));
        coprojections.push_back(std::move(c));
    }

    ConnSpace space = generate(GroundSet::of(classes), SubsetFamily(std::move(generators)),
                               diagram.objects[0].integral(), limits);
    return Cocone{std::move(space), std::move(coprojections)};
}

Cone limit(const Diagram& diagram, const Limits& limits) {
    if (diagram.objects.empty())
        raise(Errc::bad_argument, "limit needs at least one object");

    std::size_t k = diagram.objects.size();
    // Commuting tuples in lexicographic order, first object slowest.
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> current(k, 0);
    bool any_empty = false;
    for (const ConnSpace& obj : diagram.objects)
        if (obj.size() == 0) any_empty = true;
    if (!any_empty) {
        for (;;) {
            bool commutes = true;
            for (const Arrow& arrow : diagram.arrows) {
                if (arrow.map(current[arrow.source]) != current[arrow.target]) {
                    commutes = false;
                    break;
                }
            }
            if (commutes) tuples.push_back(current);
            std::size_t pos = k;
            bool rolled_over = true;
            while (pos-- > 0) {
                if (++current[pos] < diagram.objects[pos].size()) {
                    rolled_over = false;
                    break;
                }
                current[pos] = 0;
            }
            if (rolled_over) break;
        }
    }

    std::size_t carrier = tuples.size();
    check_carrier(carrier, limits);
    if (carrier >= 64)
        raise(Errc::size_limit_exceeded, "powerset enumeration needs fewer than 64 points");

    std::vector<PointMap> projections;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> table(carrier);
        for (std::size_t t = 0; t < carrier; ++t) table[t] = tuples[t][i];
        projections.push_back(PointMap{carrier, diagram.objects[i].size(), std::move(table)});
    }

    std::vector<Subset> members;
    std::uint64_t count = std::uint64_t{1} << carrier;
    for (std::uint64_t m = 0; m < count; ++m) {
        Subset s{m};
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i)
            ok = diagram.objects[i].is_connected(projections[i].image(s));
        if (ok) {
            members.push_back(s);
            if (members.size() > limits.max_family)
                raise(Errc::family_size_limit_exceeded, "limit exceeds the family limit");
        }
    }

    ConnSpace space = ConnSpace::trusted(GroundSet::of(carrier), SubsetFamily(std::move(members)),
                                         diagram.objects[0].integral());
    return Cone{std::move(space), std::move(projections)};
}

ConnSpace tensor(const ConnSpace& a, const ConnSpace& b, const Limits& limits) {
    std::size_t n1 = a.size(), n2 = b.size();
    std::size_t carrier = n1 * n2;
    check_carrier(carrier, limits);

    std::vector<Subset> boxes;
    for (Subset k1 : a.structure().members()) {
        if (k1.is_empty()) continue;
        for (Subset k2 : b.structure().members()) {
            if (k2.is_empty()) continue;
            std::uint64_t bits = 0;
            k1.for_each_point([&](std::size_t i) { bits |= k2.bits << (i * n2); });
            boxes.push_back(Subset{bits});
        }
    }
    return generate(GroundSet::of(carrier), SubsetFamily(std::move(boxes)),
                    a.integral() && b.integral(), limits);
}

bool is_partially_connecting(const PointMap& f, const ConnSpace& x1, const ConnSpace& x2,
                             const ConnSpace& y) {
    std::size_t n1 = x1.size(), n2 = x2.size();
    if (f.source_size != n1 * n2 || f.target_size != y.size())
        raise(Errc::ground_mismatch, "map endpoints do not match the pair carrier");

    for (std::size_t i = 0; i < n1; ++i) {
        for (Subset k : x2.structure().members()) {
            if (k.is_empty()) continue;
            Subset img;
            k.for_each_point([&](std::size_t j) { img = img.with(f(pair_point(i, j, n2))); });
            if (!y.is_connected(img)) return false;
        }
    }
    for (std::size_t j = 0; j < n2; ++j) {
        for (Subset k : x1.structure().members()) {
            if (k.is_empty()) continue;
            Subset img;
            k.for_each_point([&](std::size_t i) { img = img.with(f(pair_point(i, j, n2))); });
            if (!y.is_connected(img)) return false;
        }
    }
    return true;
}

void for_each_morphism(const ConnSpace& x, const ConnSpace& y, const Limits& limits,
                       const std::function<void(const PointMap&)>& visit) {
    if (capped_pow(y.size(), x.size(), limits.max_hom) > limits.max_hom)
        raise(Errc::hom_too_large,
              "candidate function count exceeds " + std::to_string(limits.max_hom));

    std::size_t n = x.size();
    std::vector<std::vector<Subset>> by_max(n);
    for (Subset k : x.structure().members())
        if (!k.is_empty()) by_max[k.max_point()].push_back(k);

    std::vector<std::size_t> table(n, 0);
    PointMap f{n, y.size(), {}};

    auto dfs = [&](auto&& self, std::size_t depth) -> void {
        if (depth == n) {
            f.table = table;
            visit(f);
            return;
        }
        for (std::size_t v = 0; v < y.size(); ++v) {
            table[depth] = v;
            bool ok = true;
            for (Subset k : by_max[depth]) {
                Subset img;
                k.for_each_point([&](std::size_t p) { img = img.with(table[p]); });
                if (!y.is_connected(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, depth + 1);
        }
    };
    dfs(dfs, 0);
}

std::vector<PointMap> hom_set(const ConnSpace& x, const ConnSpace& y, const Limits& limits) {
    std::vector<PointMap> out;
    for_each_morphism(x, y, limits, [&](const PointMap& f) { out.push_back(f); });
    return out;
}

bool hom_subset_connected(const ConnSpace& y, const std::vector<PointMap>& homs, Subset m) {
    if (m.is_empty()) return true;
    std::size_t nx = homs[m.min_point()].source_size;
    for (std::size_t p = 0; p < nx; ++p) {
        Subset img;
        m.for_each_point([&](std::size_t fi) { img = img.with(homs[fi](p)); });
        if (!y.is_connected(img)) return false;
    }
    return true;
}

HomSpace hom_space(const ConnSpace& x, const ConnSpace& y, const Limits& limits) {
    if (!x.integral() || !y.integral())
        raise(Errc::not_integral, "morphism spaces need integral operands");
    std::vector<PointMap> homs = hom_set(x, y, limits);
    check_carrier(homs.size(), limits);
    if (homs.size() >= 64)
        raise(Errc::size_limit_exceeded, "powerset enumeration needs fewer than 64 points");

    std::vector<Subset> members;
    std::uint64_t count = std::uint64_t{1} << homs.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        if (hom_subset_connected(y, homs, Subset{mask})) {
            members.push_back(Subset{mask});
            if (members.size() > limits.max_family)
                raise(Errc::family_size_limit_exceeded, "morphism space exceeds the family limit");
        }
    }
    ConnSpace space = ConnSpace::trusted(GroundSet::of(homs.size()),
                                         SubsetFamily(std::move(members)), true);
    return HomSpace{std::move(space), std::move(homs)};
}

namespace {

std::map<std::vector<std::size_t>, std::size_t> index_by_table(const std::vector<PointMap>& homs) {
    std::map<std::vector<std::size_t>, std::size_t> out;
    for (std::size_t i = 0; i < homs.size(); ++i) out[homs[i].table] = i;
    return out;
}

void require_integral(const ConnSpace& s, const char* what) {
    if (!s.integral()) raise(Errc::not_integral, std::string(what) + " must be integral");
}

} // namespace

PointMap curry(const PointMap& psi, const ConnSpace& x, const ConnSpace& y, const ConnSpace& z,
               const Limits& limits) {
    require_integral(x, "curry operand");
    require_integral(y, "curry operand");
    require_integral(z, "curry operand");
    ConnSpace xy = tensor(x, y, limits);
    if (!is_morphism(psi, xy, z))
        raise(Errc::not_morphism, "curry input is not a morphism from the tensor");

    std::vector<PointMap> homs = hom_set(x, z, limits);
    auto index = index_by_table(homs);
    std::vector<std::size_t> table(y.size());
    for (std::size_t yy = 0; yy < y.size(); ++yy) {
        std::vector<std::size_t> partial(x.size());
        for (std::size_t xx = 0; xx < x.size(); ++xx)
            partial[xx] = psi(pair_point(xx, yy, y.size()));
        auto it = index.find(partial);
        if (it == index.end())
            raise(Errc::not_morphism, "partial map is not a morphism"); // unreachable for valid psi
        table[yy] = it->second;
    }
    return PointMap{y.size(), homs.size(), std::move(table)};
}

PointMap uncurry(const PointMap& phi, const ConnSpace& x, const ConnSpace& y, const ConnSpace& z,
                 const Limits& limits) {
    require_integral(x, "uncurry operand");
    require_integral(y, "uncurry operand");
    require_integral(z, "uncurry operand");
    std::vector<PointMap> homs = hom_set(x, z, limits);
    if (phi.source_size != y.size() || phi.target_size != homs.size())
        raise(Errc::ground_mismatch, "map endpoints do not match the morphism space");
    for (Subset l : y.structure().members()) {
        if (l.is_empty()) continue;
        if (!hom_subset_connected(z, homs, phi.image(l)))
            raise(Errc::not_morphism, "uncurry input is not a morphism into the morphism space");
    }

    std::vector<std::size_t> table(x.size() * y.size());
    for (std::size_t xx = 0; xx < x.size(); ++xx)
        for (std::size_t yy = 0; yy < y.size(); ++yy)
            table[pair_point(xx, yy, y.size())] = homs[phi(yy)](xx);
    return PointMap{x.size() * y.size(), z.size(), std::move(table)};
}

Interval Interval::of(ConnSpace space, std::size_t zero, std::size_t one) {
    if (!space.integral()) raise(Errc::not_integral, "time spaces must be integral");
    if (space.size() == 0) raise(Errc::bad_argument, "time spaces must be nonempty");
    if (zero >= space.size() || one >= space.size())
        raise(Errc::invalid_point, "marked time point outside the carrier");
    return Interval{std::move(space), zero, one};
}

bool verify_homotopy(const PointMap& h, const PointMap& f, const PointMap& g, const Interval& i,
                     const ConnSpace& x, const ConnSpace& y) {
    require_integral(x, "homotopy operand");
    require_integral(y, "homotopy operand");
    std::size_t nt = i.space.size(), nx = x.size();
    if (h.source_size != nt * nx || h.target_size != y.size())
        raise(Errc::ground_mismatch, "homotopy table does not match the time-pair carrier");
    if (f.source_size != nx || f.target_size != y.size() || g.source_size != nx ||
        g.target_size != y.size())
        raise(Errc::ground_mismatch, "endpoint maps do not match the spaces");
    if (!is_morphism(f, x, y) || !is_morphism(g, x, y))
        raise(Errc::not_morphism, "homotopy endpoints must be morphisms");

    for (std::size_t p = 0; p < nx; ++p) {
        if (h(pair_point(i.zero, p, nx)) != f(p)) return false;
        if (h(pair_point(i.one, p, nx)) != g(p)) return false;
    }
    return is_partially_connecting(h, i.space, x, y);
}

std::optional<PointMap> homotopic(const PointMap& f, const PointMap& g, const Interval& i,
                                  const ConnSpace& x, const ConnSpace& y, const Limits& limits) {
    require_integral(x, "homotopy operand");
    require_integral(y, "homotopy operand");
    std::size_t nt = i.space.size(), nx = x.size(), ny = y.size();
    if (f.source_size != nx || g.source_size != nx || f.target_size != ny || g.target_size != ny)
        raise(Errc::ground_mismatch, "endpoint maps do not match the spaces");
    if (!is_morphism(f, x, y) || !is_morphism(g, x, y))
        raise(Errc::not_morphism, "homotopy endpoints must be morphisms");
    if (capped_pow(ny, nt * nx, limits.max_search) > limits.max_search)
        raise(Errc::search_too_large,
              "homotopy search space exceeds " + std::to_string(limits.max_search));
    if (i.zero == i.one && !(f == g)) return std::nullopt;

    std::vector<std::size_t> table(nt * nx, 0);
    for (std::size_t p = 0; p < nx; ++p) {
        table[pair_point(i.zero, p, nx)] = f(p);
        table[pair_point(i.one, p, nx)] = g(p);
    }
    std::vector<std::size_t> free_cells;
    for (std::size_t t = 0; t < nt; ++t) {
        if (t == i.zero || t == i.one) continue;
        for (std::size_t p = 0; p < nx; ++p) free_cells.push_back(pair_point(t, p, nx));
    }

    PointMap h{nt * nx, ny, {}};
    auto row_ok = [&](std::size_t t) {
        for (Subset k : x.structure().members()) {
            if (k.is_empty()) continue;
            Subset img;
            k.for_each_point([&](std::size_t p) { img = img.with(table[pair_point(t, p, nx)]); });
            if (!y.is_connected(img)) return false;
        }
        return true;
    };
    auto columns_ok = [&]() {
        for (std::size_t p = 0; p < nx; ++p) {
            for (Subset k : i.space.structure().members()) {
                if (k.is_empty()) continue;
                Subset img;
                k.for_each_point(
                    [&](std::size_t t) { img = img.with(table[pair_point(t, p, nx)]); });
                if (!y.is_connected(img)) return false;
            }
        }
        return true;
    };

    std::optional<PointMap> found;
    auto dfs = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == free_cells.size()) {
            if (!columns_ok()) return false;
            h.table = table;
            found = h;
            return true;
        }
        std::size_t cell = free_cells[idx];
        bool last_in_row = (idx + 1 == free_cells.size()) ||
                           (free_cells[idx + 1] / nx != cell / nx);
        for (std::size_t v = 0; v < ny; ++v) {
            table[cell] = v;
            if (last_in_row && !row_ok(cell / nx)) continue;
            if (self(self, idx + 1)) return true;
        }
        return false;
    };

    if (nx == 0) {
        // No points to map; the empty homotopy works exactly when the
        // endpoint maps agree (they do, both are empty).
        h.table = table;
        return h;
    }
    dfs(dfs, 0);
    return found;
}

std::optional<PointMap> homotopic_via_hom(const PointMap& f, const PointMap& g, const Interval& i,
                                          const ConnSpace& x, const ConnSpace& y,
                                          const Limits& limits) {
    require_integral(x, "homotopy operand");
    require_integral(y, "homotopy operand");
    std::vector<PointMap> homs = hom_set(x, y, limits);
    auto index = index_by_table(homs);
    auto fi = index.find(f.table);
    auto gi = index.find(g.table);
    if (f.source_size != x.size() || f.target_size != y.size() || g.source_size != x.size() ||
        g.target_size != y.size())
        raise(Errc::ground_mismatch, "endpoint maps do not match the spaces");
    if (fi == index.end() || gi == index.end())
        raise(Errc::not_morphism, "homotopy endpoints must be morphisms");

    std::size_t nt = i.space.size();
    if (capped_pow(homs.size(), nt, limits.max_search) > limits.max_search)
        raise(Errc::search_too_large,
              "homotopy search space exceeds " + std::to_string(limits.max_search));
    if (i.zero == i.one && fi->second != gi->second) return std::nullopt;

    std::vector<std::size_t> path(nt, SIZE_MAX);
    path[i.zero] = fi->second;
    path[i.one] = gi->second;

    std::vector<std::vector<Subset>> by_max(nt);
    for (Subset k : i.space.structure().members())
        if (!k.is_empty()) by_max[k.max_point()].push_back(k);

    auto check_at = [&](std::size_t t) {
        for (Subset k : by_max[t]) {
            bool complete = true;
            Subset m;
            k.for_each_point([&](std::size_t tt) {
                if (path[tt] == SIZE_MAX)
                    complete = false;
                else
                    m = m.with(path[tt]);
            });
            if (complete && !hom_subset_connected(y, homs, m)) return false;
        }
        return true;
    };

    std::optional<PointMap> found;
    auto dfs = [&](auto&& self, std::size_t t) -> bool {
        if (t == nt) {
            std::vector<std::size_t> table(nt * x.size());
            for (std::size_t tt = 0; tt < nt; ++tt)
                for (std::size_t p = 0; p < x.size(); ++p)
                    table[pair_point(tt, p, x.size())] = homs[path[tt]](p);
            found = PointMap{nt * x.size(), y.size(), std::move(table)};
            return true;
        }
        if (path[t] != SIZE_MAX) {
            if (!check_at(t)) return false;
            return self(self, t + 1);
        }
        for (std::size_t v = 0; v < homs.size(); ++v) {
            path[t] = v;
            if (check_at(t) && self(self, t + 1)) return true;
        }
        path[t] = SIZE_MAX;
        return false;
    };
    dfs(dfs, 0);
    return found;
}

} // namespace connspace
