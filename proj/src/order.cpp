#include "csknot/order.hpp"

#include <algorithm>

#include "csknot/cs.hpp"

namespace csknot {

Order::Order(IntPoly f) : f_(std::move(f)) {
    if (!f_.is_monic()) throw NonMonicError("Order: polynomial must be monic");
    if (f_.degree() < 2) throw DegreeTooSmallError("Order: degree must be >= 2");
    mult_theta_ = companion_matrix(f_);
    disc_ = discriminant(f_);
}

OrderPtr make_order(const IntPoly& f) { return std::make_shared<const Order>(f); }

bool OrderElement::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Int& v) { return v == 0; });
}

OrderElement elem_from_coords(OrderPtr o, std::vector<Int> coords) {
    if (coords.size() != o->degree()) throw ShapeError("elem_from_coords: wrong length");
    return OrderElement{std::move(o), std::move(coords)};
}

OrderElement elem_from_poly(OrderPtr o, const IntPoly& g) {
    const IntPoly r = divrem(g, o->poly()).second;
    std::vector<Int> c(o->degree(), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.coeff(i);
    return OrderElement{std::move(o), std::move(c)};
}

OrderElement elem_int(OrderPtr o, Int v) {
    std::vector<Int> c(o->degree(), Int(0));
    c[0] = std::move(v);
    return OrderElement{std::move(o), std::move(c)};
}

OrderElement elem_one(OrderPtr o) { return elem_int(std::move(o), Int(1)); }

OrderElement elem_theta(OrderPtr o) {
    std::vector<Int> c(o->degree(), Int(0));
    c[1] = 1;
    return OrderElement{std::move(o), std::move(c)};
}

namespace {
void require_same(const OrderElement& x, const OrderElement& y) {
    if (!same_order(x.order, y.order))
        throw OrderMismatchError("order elements live in different orders");
}
} // namespace

OrderElement elem_add(const OrderElement& x, const OrderElement& y) {
    require_same(x, y);
    std::vector<Int> c(x.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords[i] + y.coords[i];
    return OrderElement{x.order, std::move(c)};
}

OrderElement elem_sub(const OrderElement& x, const OrderElement& y) {
    require_same(x, y);
    std::vector<Int> c(x.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords[i] - y.coords[i];
    return OrderElement{x.order, std::move(c)};
}

OrderElement elem_neg(const OrderElement& x) {
    std::vector<Int> c(x.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -x.coords[i];
    return OrderElement{x.order, std::move(c)};
}

OrderElement elem_mul(const OrderElement& x, const OrderElement& y) {
    require_same(x, y);
    return elem_from_poly(x.order, elem_to_poly(x) * elem_to_poly(y));
}

OrderElement elem_mul_theta(const OrderElement& x) {
    return OrderElement{x.order, vec_mat(x.coords, x.order->mult_theta())};
}

IntMatrix multiplication_matrix(const OrderElement& x) {
    const std::size_t n = x.order->degree();
    IntMatrix m(n, n);
    OrderElement pw = x; // x * theta^i, row by row
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = pw.coords[j];
        if (i + 1 < n) pw = elem_mul_theta(pw);
    }
    return m;
}

Int elem_norm(const OrderElement& x) { return det(multiplication_matrix(x)); }

IntPoly elem_to_poly(const OrderElement& x) { return IntPoly{std::vector<Int>(x.coords)}; }

} // namespace csknot
