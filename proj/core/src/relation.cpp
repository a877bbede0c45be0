#include "topoevid/relation.hpp"

#include <stdexcept>

namespace topoevid {

Mask Bits::to_mask() const {
    if (n_ > kMaxCarrier) throw std::logic_error("bitset too wide for a carrier mask");
    Mask m = 0;
    for (int i = 0; i < n_; ++i)
        if (test(i)) m |= Mask{1} << i;
    return m;
}

Rel Rel::empty(int n) {
    Rel r;
    r.n = n;
    r.row.assign(n, Bits(n));
    return r;
}

Rel Rel::identity(int n) {
    Rel r = empty(n);
    for (int i = 0; i < n; ++i) r.row[i].set(i);
    return r;
}

Rel Rel::total(int n) {
    Rel r;
    r.n = n;
    r.row.assign(n, Bits::all(n));
    return r;
}

Bits Rel::col(int t) const {
    Bits c(n);
    for (int s = 0; s < n; ++s)
        if (row[s].test(t)) c.set(s);
    return c;
}

bool Rel::reflexive() const {
    for (int s = 0; s < n; ++s)
        if (!row[s].test(s)) return false;
    return true;
}

bool Rel::transitive() const {
    for (int s = 0; s < n; ++s)
        for (int t = row[s].next(0); t != -1; t = row[s].next(t + 1))
            if (!row[t].subset_of(row[s])) return false;
    return true;
}

bool Rel::symmetric() const {
    for (int s = 0; s < n; ++s)
        for (int t = row[s].next(0); t != -1; t = row[s].next(t + 1))
            if (!row[t].test(s)) return false;
    return true;
}

bool Rel::euclidean() const {
    for (int s = 0; s < n; ++s)
        for (int t = row[s].next(0); t != -1; t = row[s].next(t + 1))
            if (!row[s].subset_of(row[t])) return false;
    return true;
}

bool Rel::serial() const {
    for (int s = 0; s < n; ++s)
        if (row[s].none()) return false;
    return true;
}

bool Rel::subset_of(const Rel& o) const {
    for (int s = 0; s < n; ++s)
        if (!row[s].subset_of(o.row[s])) return false;
    return true;
}

Rel Rel::converse() const {
    Rel r = empty(n);
    for (int s = 0; s < n; ++s)
        for (int t = row[s].next(0); t != -1; t = row[s].next(t + 1)) r.row[t].set(s);
    return r;
}

Rel Rel::transitive_closure() const {
    Rel r = *this;
    for (int s = 0; s < n; ++s) r.row[s].set(s);
    for (int k = 0; k < n; ++k)
        for (int s = 0; s < n; ++s)
            if (r.row[s].test(k)) r.row[s] |= r.row[k];
    return r;
}

Rel Rel::equivalence_closure() const {
    return (*this | converse()).transitive_closure();
}

Rel operator&(const Rel& a, const Rel& b) {
    if (a.n != b.n) throw std::invalid_argument("relation arity mismatch");
    Rel r = a;
    for (int s = 0; s < r.n; ++s) r.row[s] &= b.row[s];
    return r;
}

Rel operator|(const Rel& a, const Rel& b) {
    if (a.n != b.n) throw std::invalid_argument("relation arity mismatch");
    Rel r = a;
    for (int s = 0; s < r.n; ++s) r.row[s] |= b.row[s];
    return r;
}

Bits max_worlds(const Rel& r) {
    Bits m(r.n);
    for (int s = 0; s < r.n; ++s)
        if (r.row[s].subset_of(r.col(s))) m.set(s);
    return m;
}

bool is_max_dense(const Rel& r) {
    Bits m = max_worlds(r);
    Rel c = r.transitive_closure();
    for (int s = 0; s < r.n; ++s)
        if (!c.row[s].intersects(m)) return false;
    return true;
}

}  // namespace topoevid
