#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

// Structural isomorphism bookkeeping for interpretations. Sequent contexts
// are multisets, but a monoidal category only offers binary tensors, so every
// rule clause has to say exactly how the fold of the conclusion context is
// rearranged into the folds of the premise contexts. This file implements
// that rearrangement once, generically over a "monoidal ops" adapter, by
// composing associators, unitors and symmetries.
//
// Folds are left-associated: fold(x0..xn) = (((x0 (*) x1) (*) x2) ...). The
// par side of L wants right-associated folds; ParPlumb below gets those by
// running the same machinery over a flipped adapter on reversed lists.

namespace lpc::semantics {

// Adapter requirements: Obj, Mor, unit(), obj(a,b), id(a), comp(g,f) = g o f,
// mor(f,g) = f (*) g, alpha(a,b,c) : (a(*)b)(*)c -> a(*)(b(*)c) with inverse,
// lambda(a) : unit(*)a -> a, rho(a) : a(*)unit -> a, both with inverses, and
// sigma(a,b) : a(*)b -> b(*)a.
template <class Ops>
struct Plumb {
    Ops ops;

    using Obj = typename Ops::Obj;
    using Mor = typename Ops::Mor;
    using Objs = std::vector<Obj>;

    Obj fold(const Objs& xs) const {
        if (xs.empty()) return ops.unit();
        Obj acc = xs[0];
        for (size_t i = 1; i < xs.size(); ++i) acc = ops.obj(acc, xs[i]);
        return acc;
    }

    // f0 (*) f1 (*) ... under the same left association as fold.
    Mor fold_map(const std::vector<Mor>& fs) const {
        if (fs.empty()) return ops.id(ops.unit());
        Mor acc = fs[0];
        for (size_t i = 1; i < fs.size(); ++i) acc = ops.mor(acc, fs[i]);
        return acc;
    }

    // fold(xs) -> fold(xs with positions j and j+1 swapped)
    Mor swap_at(const Objs& xs, size_t j) const {
        size_t n = xs.size();
        if (j + 2 > n) throw std::logic_error("plumb: swap out of range");
        if (j + 2 == n) {
            Objs prefix(xs.begin(), xs.end() - 2);
            Obj f = fold(prefix);
            Mor up = ops.alpha(f, xs[j], xs[j + 1]);
            Mor sw = ops.mor(ops.id(f), ops.sigma(xs[j], xs[j + 1]));
            Mor down = ops.alpha_inv(f, xs[j + 1], xs[j]);
            return ops.comp(down, ops.comp(sw, up));
        }
        Objs prefix(xs.begin(), xs.end() - 1);
        return ops.mor(swap_at(prefix, j), ops.id(xs.back()));
    }

    // fold(xs) -> fold([xs[order[0]], xs[order[1]], ...]); order is a
    // permutation of the indices, realized by adjacent swaps.
    Mor to_order(const Objs& xs, const std::vector<size_t>& order) const {
        size_t n = xs.size();
        if (order.size() != n) throw std::logic_error("plumb: order size mismatch");
        std::vector<size_t> cur(n);
        for (size_t i = 0; i < n; ++i) cur[i] = i;
        Mor acc = ops.id(fold(xs));
        for (size_t t = 0; t < n; ++t) {
            size_t j = t;
            while (j < n && cur[j] != order[t]) ++j;
            if (j == n) throw std::logic_error("plumb: order is not a permutation");
            for (; j > t; --j) {
                Objs arranged(n);
                for (size_t i = 0; i < n; ++i) arranged[i] = xs[cur[i]];
                acc = ops.comp(swap_at(arranged, j - 1), acc);
                std::swap(cur[j - 1], cur[j]);
            }
        }
        return acc;
    }

    static Objs without(const Objs& xs, size_t i) {
        Objs out;
        out.reserve(xs.size() - 1);
        for (size_t j = 0; j < xs.size(); ++j)
            if (j != i) out.push_back(xs[j]);
        return out;
    }

    // fold(xs) -> fold(xs \ i) (*) xs[i]
    Mor extract(const Objs& xs, size_t i) const {
        size_t n = xs.size();
        if (i >= n) throw std::logic_error("plumb: extract out of range");
        if (n == 1) return ops.lambda_inv(xs[0]);
        std::vector<size_t> order;
        order.reserve(n);
        for (size_t j = 0; j < n; ++j)
            if (j != i) order.push_back(j);
        order.push_back(i);
        return to_order(xs, order);  // fold(xs\i ++ [xs[i]]) is that tensor
    }

    // fold(xs \ i) (*) xs[i] -> fold(xs)
    Mor insert(const Objs& xs, size_t i) const {
        size_t n = xs.size();
        if (i >= n) throw std::logic_error("plumb: insert out of range");
        if (n == 1) return ops.lambda(xs[0]);
        Objs ys = without(xs, i);
        ys.push_back(xs[i]);
        std::vector<size_t> order(n);
        for (size_t t = 0; t < n; ++t) order[t] = t < i ? t : (t == i ? n - 1 : t - 1);
        return to_order(ys, order);
    }

    // fold(xs) (*) fold(ys) -> fold(xs ++ ys)
    Mor merge(const Objs& xs, const Objs& ys) const {
        if (xs.empty()) return ops.lambda(fold(ys));
        if (ys.empty()) return ops.rho(fold(xs));
        if (ys.size() == 1) return ops.id(ops.obj(fold(xs), ys[0]));
        Objs front(ys.begin(), ys.end() - 1);
        Obj y = ys.back();
        Mor step = ops.alpha_inv(fold(xs), fold(front), y);
        Mor rec = ops.mor(merge(xs, front), ops.id(y));
        return ops.comp(rec, step);
    }

    // fold(xs) -> fold(first k) (*) fold(rest); inverse of merge
    Mor split(const Objs& xs, size_t k) const {
        size_t n = xs.size();
        if (k > n) throw std::logic_error("plumb: split out of range");
        Objs a(xs.begin(), xs.begin() + k);
        Objs b(xs.begin() + k, xs.end());
        if (k == 0) return ops.lambda_inv(fold(b));
        if (k == n) return ops.rho_inv(fold(a));
        if (n - k == 1) return ops.id(ops.obj(fold(a), b[0]));
        Objs front(b.begin(), b.end() - 1);
        Obj y = b.back();
        Objs prefix(xs.begin(), xs.end() - 1);
        Mor rec = ops.mor(split(prefix, k), ops.id(y));
        Mor step = ops.alpha(fold(a), fold(front), y);
        return ops.comp(step, rec);
    }

    static void mask_groups(const Objs& xs, const std::vector<bool>& ones, Objs& zs,
                            Objs& os) {
        for (size_t i = 0; i < xs.size(); ++i) (ones[i] ? os : zs).push_back(xs[i]);
    }

    // fold(xs) -> fold(mask-false picks) (*) fold(mask-true picks)
    Mor split_mask(const Objs& xs, const std::vector<bool>& ones) const {
        if (ones.size() != xs.size()) throw std::logic_error("plumb: mask size mismatch");
        std::vector<size_t> order;
        order.reserve(xs.size());
        for (size_t i = 0; i < xs.size(); ++i)
            if (!ones[i]) order.push_back(i);
        size_t zero_count = order.size();
        for (size_t i = 0; i < xs.size(); ++i)
            if (ones[i]) order.push_back(i);
        Objs zs, os;
        mask_groups(xs, ones, zs, os);
        Objs regrouped = zs;
        regrouped.insert(regrouped.end(), os.begin(), os.end());
        return ops.comp(split(regrouped, zero_count), to_order(xs, order));
    }

    // fold(mask-false picks) (*) fold(mask-true picks) -> fold(xs)
    Mor merge_mask(const Objs& xs, const std::vector<bool>& ones) const {
        if (ones.size() != xs.size()) throw std::logic_error("plumb: mask size mismatch");
        Objs zs, os;
        mask_groups(xs, ones, zs, os);
        Objs regrouped = zs;
        regrouped.insert(regrouped.end(), os.begin(), os.end());
        // xs[t] sits at position: (rank among zeros) or zero_count + (rank
        // among ones) inside the regrouped list.
        std::vector<size_t> order(xs.size());
        size_t z = 0, o = zs.size();
        for (size_t t = 0; t < xs.size(); ++t) order[t] = ones[t] ? o++ : z++;
        return ops.comp(to_order(regrouped, order), merge(zs, os));
    }
};

} // namespace lpc::semantics
