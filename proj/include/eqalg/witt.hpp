#ifndef EQALG_WITT_HPP
#define EQALG_WITT_HPP

#include "eqalg/mackey.hpp"

namespace eqalg {

// Element of the 2-truncated twisted Witt ring of S: a pair (a, c) with a in
// S and c in the flip-coinvariants of S (x) S.
struct WittElem {
    Vec a;  // coordinates in S
    Vec c;  // coordinates in the coinvariants
};

// Exact element-level arithmetic on Witt pairs:
//   (a,c) + (a',c') = (a+a', c+c' - [a (x) a'])
//   (a,c) * (a',c') = (aa', (a(x)a)c' + c(a'(x)a') + cc' + c tau(c'))
// with ghost maps w0(a,c) = a, w1(a,c) = a(x)a + c + tau(c), Verschiebung
// V(c) = (0,c) and norm N(a) = (a,0).
class WittArith {
public:
    explicit WittArith(PresRing s);

    const PresRing& base() const { return s_; }
    const FlipSquare& square() const { return fsq_; }
    const FgAbGroup& coinv() const { return fsq_.ic.coinvariants.group; }

    WittElem zero() const;
    WittElem one() const;
    WittElem norm(const Vec& a) const;        // N(a) = (a, 0)
    WittElem versch(const Vec& c) const;      // V(c) = (0, c)
    WittElem add(const WittElem& x, const WittElem& y) const;
    WittElem neg(const WittElem& x) const;
    WittElem mul(const WittElem& x, const WittElem& y) const;
    WittElem scale(const Int& n, const WittElem& x) const;
    bool same(const WittElem& x, const WittElem& y) const;
    bool is_zero_elem(const WittElem& x) const;

    Vec ghost0(const WittElem& x) const { return s_.carrier.reduce(x.a); }
    // lands in S (x) S (canonical coordinates of the tensor square)
    Vec ghost1(const WittElem& x) const;

    // projection S (x) S -> coinvariants and its chosen section
    Vec to_coinv(const Vec& tensor_elt) const;
    Vec lift_coinv(const Vec& c) const;

private:
    PresRing s_;
    FlipSquare fsq_;
    WittElem reduce(WittElem x) const;
};

// The Witt ring packaged as a Green functor: underlying level S (x) S with
// the flip, fixed level presented by norm and Verschiebung generators.
struct WittGreen {
    GreenZ2 green;
    WittArith arith;
    Presentation pres;  // over n_s norm generators followed by n_c Verschiebung gens
    long n_s = 0, n_c = 0;

    Vec elem_to_fix(const WittElem& x) const;  // canonical level_fix coordinates
    WittElem fix_to_elem(const Vec& v) const;
    WittElem eval_raw(const Vec& raw) const;   // value of a formal N/V combination

    // tran and res of the Green structure in element terms
    Vec tran_of_tensor(const Vec& t) const { return green.mackey.tran.apply(t); }

    std::optional<std::vector<Int>> decomposition;  // invariant factors, finite S only
};

WittGreen witt_green(const PresRing& s, bool finite_decomposition = false);

}  // namespace eqalg

#endif
