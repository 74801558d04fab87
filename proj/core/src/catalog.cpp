#include "axtk/catalog.hpp"

namespace axtk::catalog {

namespace {

Scalar beta_of_6A(const Scalar& alpha) {
    const FieldPtr& f = alpha.field();
    return -(alpha * alpha) / (f->from_int(4) * (f->from_int(2) * alpha - 1));
}

Scalar gamma_of_6A(const Scalar& alpha) {
    const FieldPtr& f = alpha.field();
    return alpha / (f->from_int(8) * (f->from_int(2) * alpha - 1));
}

void forbid(const Scalar& value, const Rat& bad, const std::string& what) {
    const FieldPtr& f = value.field();
    Scalar b;
    try {
        b = f->from_rat(bad);
    } catch (const DivisionByZero&) {
        return;  // the excluded value does not exist in this characteristic
    }
    if (value == b)
        throw InvalidParameter(what + " = " + Rat(bad).get_str() + " is excluded");
}

}  // namespace

CatalogEntry build_2B(const FieldPtr& field, const Scalar& alpha, const Scalar& beta) {
    auto alg = std::make_shared<Algebra>(field, std::vector<std::string>{"a", "b"});
    Algebra& A = *alg;
    A.set_product(0, 0, A.basis_vector(0));
    A.set_product(1, 1, A.basis_vector(1));
    A.set_product(0, 1, A.zero_vector());
    CatalogEntry e{"2B", alg, {0, 1}, FusionLaw::monster(alpha, beta), axet::Kind::regular(2), {}};
    e.params["alpha"] = alpha.str();
    e.params["beta"] = beta.str();
    return e;
}

CatalogEntry build_2B() {
    FieldPtr f = Field::function(Field::rationals(), {"alpha", "beta"});
    return build_2B(f, f->variable("alpha"), f->variable("beta"));
}

CatalogEntry build_3C(const Scalar& eta) {
    forbid(eta, Rat(0), "eta");
    forbid(eta, Rat(1), "eta");
    const FieldPtr& f = eta.field();
    auto alg = std::make_shared<Algebra>(f, std::vector<std::string>{"a", "b", "c"});
    Algebra& A = *alg;
    Scalar h = eta / 2;
    auto pair_product = [&](std::size_t i, std::size_t j, std::size_t k) {
        Vector v = (A.basis_vector(i) + A.basis_vector(j) - A.basis_vector(k)).scaled(h);
        A.set_product(i, j, std::move(v));
    };
    for (std::size_t i = 0; i < 3; ++i) A.set_product(i, i, A.basis_vector(i));
    pair_product(0, 1, 2);
    pair_product(1, 2, 0);
    pair_product(0, 2, 1);
    CatalogEntry e{"3C", alg, {0, 1, 2}, FusionLaw::jordan(eta), axet::Kind::regular(3), {}};
    e.params["eta"] = eta.str();
    return e;
}

CatalogEntry build_3C() {
    FieldPtr f = Field::function(Field::rationals(), {"eta"});
    return build_3C(f->variable("eta"));
}

CatalogEntry build_6A(const Scalar& alpha) {
    const FieldPtr& f = alpha.field();
    forbid(alpha, Rat(0), "alpha");
    forbid(alpha, Rat(1), "alpha");
    forbid(alpha, Rat(1, 2), "alpha");  // beta would be undefined
    forbid(alpha, Rat(4, 9), "alpha");  // alpha = 4/9 makes alpha = beta
    Scalar beta = beta_of_6A(alpha);
    forbid(beta, Rat(0), "beta");
    forbid(beta, Rat(1), "beta");
    if (alpha == beta) throw InvalidParameter("alpha = beta in this field");
    Scalar gamma = gamma_of_6A(alpha);

    // basis order: b_-2, b_-1, b_0, b_1, b_2, b_3, c, z
    std::vector<std::string> names{"b-2", "b-1", "b0", "b1", "b2", "b3", "c", "z"};
    auto alg = std::make_shared<Algebra>(f, names);
    Algebra& A = *alg;
    const std::size_t C = 6, Z = 7;

    auto b = [&](long i) {  // basis position of b_i, index mod 6 in {-2..3}
        long r = ((i + 2) % 6 + 6) % 6;
        return static_cast<std::size_t>(r);
    };
    auto bv = [&](long i) { return A.basis_vector(b(i)); };
    Vector c = A.basis_vector(C), z = A.basis_vector(Z);
    Scalar half = f->from_rat(Rat(1, 2));
    Scalar quarter = f->from_rat(Rat(1, 4));
    Scalar two = f->from_int(2);
    Scalar three = f->from_int(3);
    Scalar five = f->from_int(5);

    for (long i = -2; i <= 3; ++i) {
        A.set_product(b(i), b(i), bv(i));
        // b_i c = alpha/2 (b_i + c - b_{i+3})
        A.set_product(b(i), C, (bv(i) + c - bv(i + 3)).scaled(alpha * half));
        // b_i z = 2 gamma (3 alpha - 2)(2 b_i - b_{i-2} - b_{i+2} + z)
        A.set_product(b(i), Z, (bv(i).scaled(two) - bv(i - 2) - bv(i + 2) + z)
                                   .scaled(two * gamma * (three * alpha - two)));
        for (long j = i + 1; j <= 3; ++j) {
            switch (j - i) {
                case 1:
                    // beta/2 (b_i + b_{i+1} - b_{i+2} - b_{i+3} - b_{i-1} - b_{i-2} + c + z)
                    A.set_product(b(i), b(j),
                                  (bv(i) + bv(j) - bv(i + 2) - bv(i + 3) - bv(i - 1) - bv(i - 2) +
                                   c + z)
                                      .scaled(beta * half));
                    break;
                case 2:
                    // alpha/4 (b_i + b_{i+2}) + 2 gamma (3 alpha - 1) b_{i+4}
                    //   - gamma (5 alpha - 2) z
                    A.set_product(b(i), b(j),
                                  (bv(i) + bv(j)).scaled(alpha * quarter) +
                                      bv(i + 4).scaled(two * gamma * (three * alpha - 1)) -
                                      z.scaled(gamma * (five * alpha - two)));
                    break;
                case 3:
                    // alpha/2 (b_i + b_{i+3} - c)
                    A.set_product(b(i), b(j), (bv(i) + bv(j) - c).scaled(alpha * half));
                    break;
                case 4:
                    // the pair (b_j, b_{j+2}) wrapped around
                    A.set_product(b(i), b(j),
                                  (bv(j) + bv(i)).scaled(alpha * quarter) +
                                      bv(j + 4).scaled(two * gamma * (three * alpha - 1)) -
                                      z.scaled(gamma * (five * alpha - two)));
                    break;
                case 5:
                    // the pair (b_j, b_{j+1}) wrapped around
                    A.set_product(b(i), b(j),
                                  (bv(j) + bv(i) - bv(j + 2) - bv(j + 3) - bv(j - 1) - bv(j - 2) +
                                   c + z)
                                      .scaled(beta * half));
                    break;
            }
        }
    }
    A.set_product(C, C, c);
    A.set_product(C, Z, A.zero_vector());
    // z^2 = (2 gamma / alpha)(alpha + 2)(3 alpha - 2) z
    A.set_product(Z, Z, z.scaled(two * gamma / alpha * (alpha + two) * (three * alpha - two)));

    CatalogEntry e{"6A",
                   alg,
                   {0, 1, 2, 3, 4, 5},
                   FusionLaw::monster(alpha, beta),
                   axet::Kind::regular(6),
                   {}};
    e.params["alpha"] = alpha.str();
    e.params["beta"] = beta.str();
    e.params["gamma"] = gamma.str();
    return e;
}

CatalogEntry build_6A() {
    FieldPtr f = Field::function(Field::rationals(), {"alpha"});
    return build_6A(f->variable("alpha"));
}

std::vector<std::string> entry_names() { return {"2B", "3C", "6A"}; }

CatalogEntry build(const std::string& name, const std::optional<Scalar>& alpha) {
    if (name == "2B") {
        if (alpha) throw InvalidParameter("2B takes no parameter");
        return build_2B();
    }
    if (name == "3C") return alpha ? build_3C(*alpha) : build_3C();
    if (name == "6A") return alpha ? build_6A(*alpha) : build_6A();
    throw InvalidParameter("unknown catalog entry '" + name + "'");
}

}  // namespace axtk::catalog
