#ifndef CSKNOT_ORDER_HPP
#define CSKNOT_ORDER_HPP

#include <memory>
#include <vector>

#include "csknot/int_matrix.hpp"
#include "csknot/int_poly.hpp"

namespace csknot {

/// The order Z[theta] = Z[x]/(f), f monic irreducible of degree n >= 2.
/// Elements are integer coordinate rows over the power basis 1, theta, ...,
/// theta^{n-1}; theta acts on coordinate rows by right-multiplication with
/// the companion matrix.
class Order {
public:
    explicit Order(IntPoly f);

    const IntPoly& poly() const { return f_; }
    const IntMatrix& mult_theta() const { return mult_theta_; }
    const Int& disc() const { return disc_; }
    std::size_t degree() const { return static_cast<std::size_t>(f_.degree()); }

    bool operator==(const Order& o) const { return f_ == o.f_; }

private:
    IntPoly f_;
    IntMatrix mult_theta_;
    Int disc_;
};

using OrderPtr = std::shared_ptr<const Order>;

OrderPtr make_order(const IntPoly& f);

inline bool same_order(const OrderPtr& a, const OrderPtr& b) {
    return a == b || (*a == *b);
}

struct OrderElement {
    OrderPtr order;
    std::vector<Int> coords; // length n

    bool is_zero() const;
};

OrderElement elem_from_coords(OrderPtr o, std::vector<Int> coords);
OrderElement elem_from_poly(OrderPtr o, const IntPoly& g); // reduce mod f
OrderElement elem_int(OrderPtr o, Int v);
OrderElement elem_one(OrderPtr o);
OrderElement elem_theta(OrderPtr o);

OrderElement elem_add(const OrderElement& x, const OrderElement& y);
OrderElement elem_sub(const OrderElement& x, const OrderElement& y);
OrderElement elem_neg(const OrderElement& x);
OrderElement elem_mul(const OrderElement& x, const OrderElement& y);
OrderElement elem_mul_theta(const OrderElement& x);

/// Matrix of multiplication by x: coords(u * x) = coords(u) * M.
IntMatrix multiplication_matrix(const OrderElement& x);

/// Field norm N(x) = det of the multiplication-by-x map.
Int elem_norm(const OrderElement& x);

IntPoly elem_to_poly(const OrderElement& x);

} // namespace csknot

#endif
