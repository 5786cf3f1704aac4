#include "zinbiel/catalog.hpp"

namespace zinbiel {

Algebra<RationalField> algebra_from_terms(int dim, const std::string& name,
                                          const std::vector<ProductTerm>& terms) {
    Algebra<RationalField> a(RationalField{}, dim, name);
    for (const auto& t : terms) {
        if (t.i < 1 || t.i > dim || t.j < 1 || t.j > dim || t.k < 1 || t.k > dim)
            throw usage_error("product term out of range in " + name);
        a.set_constant(t.i, t.j, t.k, a.constant(t.i, t.j, t.k) + t.c);
    }
    a.finalize();
    return a;
}

Algebra<RationalField> example_3_1() {
    // Nonzero products: e1^2 = e5-e6; [e1,e2] = [e3,e2] = e4+e5-e6;
    // [e1,e3] = [e1,e5] = [e1,e6] = -[e3,e1] = e2; [e5,e2] = [e6,e2] = e4;
    // [e5,e1] = [e6,e1] = -e2+2e4.
    std::vector<ProductTerm> t = {
        {1, 1, 5, 1},  {1, 1, 6, -1},
        {1, 2, 4, 1},  {1, 2, 5, 1},  {1, 2, 6, -1},
        {3, 2, 4, 1},  {3, 2, 5, 1},  {3, 2, 6, -1},
        {1, 3, 2, 1},  {1, 5, 2, 1},  {1, 6, 2, 1},
        {3, 1, 2, -1},
        {5, 2, 4, 1},  {6, 2, 4, 1},
        {5, 1, 2, -1}, {5, 1, 4, 2},
        {6, 1, 2, -1}, {6, 1, 4, 2},
    };
    return algebra_from_terms(6, "example-3-1", t);
}

static Rational binom(int n, int k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Algebra<RationalField> null_filiform(int n) {
    if (n < 2) throw usage_error("null-filiform algebras need dimension >= 2");
    std::vector<ProductTerm> t;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i + j <= n) t.push_back({i, j, i + j, binom(i + j - 1, j)});
    return algebra_from_terms(n, "NF:" + std::to_string(n), t);
}

Algebra<RationalField> filiform(int n, int variant) {
    if (n < 4) throw usage_error("filiform algebras need dimension >= 4");
    if (variant < 1 || variant > 3) throw usage_error("filiform variant must be 1, 2 or 3");
    std::vector<ProductTerm> t;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i + j <= n - 1) t.push_back({i, j, i + j, binom(i + j - 1, j)});
    if (variant == 2) t.push_back({n, 1, n - 1, 1});
    if (variant == 3) t.push_back({n, n, n - 1, 1});
    return algebra_from_terms(n, "F:" + std::to_string(n) + ":" + std::to_string(variant), t);
}

namespace {

const Rational kHalf(1, 2);

std::vector<Rational> default_samples(const ParamPredicate& domain) {
    std::vector<Rational> out;
    for (const Rational& v : {Rational(0), Rational(1), Rational(2), Rational(-1), kHalf})
        if (domain.eval(v)) out.push_back(v);
    return out;
}

struct Builder {
    std::vector<CatalogEntry> entries;

    void fixed(std::string id, int dim, std::string source, int ann, int alpha, int beta,
               std::vector<ProductTerm> terms) {
        CatalogEntry e;
        e.id = std::move(id);
        e.dim = dim;
        e.source = std::move(source);
        e.caption_center_dim = ann;
        e.products = [t = std::move(terms)](const Rational&) { return t; };
        e.published = {{ParamPredicate::always(), alpha, beta}};
        e.samples = {Rational(0)};
        entries.push_back(std::move(e));
    }

    void parametric(std::string id, int dim, std::string source, int ann, ParamPredicate domain,
                    std::vector<PublishedCase> cases,
                    std::function<std::vector<ProductTerm>(const Rational&)> products) {
        CatalogEntry e;
        e.id = std::move(id);
        e.dim = dim;
        e.source = std::move(source);
        e.caption_center_dim = ann;
        e.param = "alpha";
        e.domain = domain;
        e.products = std::move(products);
        e.published = std::move(cases);
        e.samples = default_samples(domain);
        entries.push_back(std::move(e));
    }
};

} // namespace

Catalog::Catalog() {
    Builder b;
    const std::string t1 = "dim<=4";
    const std::string t2 = "dim5/ann2 (I)";
    const std::string t3 = "dim5/ann2 (II)";
    const std::string t4 = "dim5/ann1 (I)";
    const std::string t5 = "dim5/ann1 (II)";
    const std::string t6 = "dim5/ann1 (III)";
    const std::string t7 = "dim5/ann1 (IV)";
    const std::string t8 = "dim5/ann1 (V)";

    // --- dimension <= 4 ---
    b.fixed("Z2_1", 2, t1, 0, 1, 1, {{1, 1, 2, 1}});
    b.fixed("Z3_1", 3, t1, 0, 2, 2, {{1, 1, 2, 1}, {1, 2, 3, kHalf}, {2, 1, 3, 1}});
    b.fixed("Z3_2", 3, t1, 0, 2, 2, {{1, 2, 3, 1}, {2, 1, 3, -1}});
    b.parametric("Z3_3", 3, t1, 0, ParamPredicate::always(),
                 {{ParamPredicate::eq(0), 2, 2}, {ParamPredicate::neq(0), 1, 1}},
                 [](const Rational& a) {
                     return std::vector<ProductTerm>{{1, 1, 3, 1}, {1, 2, 3, 1}, {2, 2, 3, a}};
                 });
    b.fixed("Z3_4", 3, t1, 0, 2, 2, {{1, 1, 3, 1}, {1, 2, 3, 1}, {2, 1, 3, 1}});
    b.fixed("Z4_1", 4, t1, 0, 2, 2,
            {{1, 1, 2, 1}, {1, 2, 3, 1}, {2, 1, 3, 2}, {1, 3, 4, 1}, {2, 2, 4, 3}, {3, 1, 4, 3}});
    b.fixed("Z4_2", 4, t1, 0, 3, 3, {{1, 1, 3, 1}, {1, 2, 4, 1}, {1, 3, 4, 1}, {3, 1, 4, 2}});
    b.fixed("Z4_3", 4, t1, 0, 2, 2, {{1, 1, 3, 1}, {1, 3, 4, 1}, {2, 2, 4, 1}, {3, 1, 4, 2}});
    b.fixed("Z4_4", 4, t1, 0, 3, 3, {{1, 2, 3, 1}, {1, 3, 4, 1}, {2, 1, 3, -1}});
    b.fixed("Z4_5", 4, t1, 0, 2, 2, {{1, 2, 3, 1}, {1, 3, 4, 1}, {2, 1, 3, -1}, {2, 2, 4, 1}});
    b.fixed("Z4_6", 4, t1, 0, 2, 2,
            {{1, 1, 4, 1}, {1, 2, 3, 1}, {2, 1, 3, -1}, {2, 2, 3, -2}, {2, 2, 4, 1}});
    b.fixed("Z4_7", 4, t1, 0, 3, 3, {{1, 2, 3, 1}, {2, 1, 4, 1}, {2, 2, 3, -1}});
    b.parametric("Z4_8", 4, t1, 0, ParamPredicate::always(),
                 {{ParamPredicate::eq(1), 3, 3}, {ParamPredicate::neq(1), 2, 2}},
                 [](const Rational& a) {
                     return std::vector<ProductTerm>{
                         {1, 1, 3, 1}, {1, 2, 4, 1}, {2, 1, 3, -a}, {2, 2, 4, -1}};
                 });
    b.parametric("Z4_9", 4, t1, 0, ParamPredicate::always(),
                 {{ParamPredicate::always(), 1, 1}},
                 [](const Rational& a) {
                     return std::vector<ProductTerm>{
                         {1, 1, 4, 1}, {1, 2, 4, a}, {2, 1, 4, -a}, {2, 2, 4, 1}, {3, 3, 4, 1}};
                 });
    b.fixed("Z4_10", 4, t1, 0, 2, 2,
            {{1, 2, 4, 1}, {1, 3, 4, 1}, {2, 1, 4, -1}, {2, 2, 4, 1}, {3, 1, 4, 1}});
    b.fixed("Z4_11", 4, t1, 0, 2, 2, {{1, 1, 4, 1}, {1, 2, 4, 1}, {2, 1, 4, -1}, {3, 3, 4, 1}});
    b.fixed("Z4_12", 4, t1, 0, 3, 3, {{1, 2, 3, 1}, {2, 1, 4, 1}});
    b.fixed("Z4_13", 4, t1, 0, 3, 3, {{1, 2, 3, 1}, {2, 1, 3, -1}, {2, 2, 4, 1}});
    b.fixed("Z4_14", 4, t1, 0, 3, 3, {{2, 1, 4, 1}, {3, 1, 4, 1}});
    b.parametric("Z4_15", 4, t1, 0, ParamPredicate::neq(1),
                 {{ParamPredicate::always(), 3, 3}},
                 [](const Rational& a) {
                     Rational coeff = (Rational(1) + a) / (Rational(1) - a);
                     return std::vector<ProductTerm>{{1, 2, 4, 1}, {2, 2, 3, 1}, {2, 1, 4, coeff}};
                 });
    b.fixed("Z4_16", 4, t1, 0, 2, 2, {{1, 2, 4, 1}, {2, 1, 4, -1}, {3, 3, 4, 1}});

    // --- dimension 5, 2-dimensional annihilator ---
    b.fixed("Z5_1", 5, t2, 2, 3, 3, {{1, 1, 2, 1}, {1, 2, 4, 1}, {2, 1, 4, 2}, {3, 3, 4, 1}});
    b.fixed("Z5_2", 5, t2, 2, 3, 3, {{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 4, 1}, {2, 1, 4, 2}});
    b.fixed("Z5_3", 5, t2, 2, 4, 4, {{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 5, 1}, {2, 1, 4, 2}});
    b.parametric("Z5_4", 5, t2, 2, ParamPredicate::always(),
                 {{ParamPredicate::always(), 4, 4}},
                 [](const Rational& a) {
                     return std::vector<ProductTerm>{
                         {1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 5, a}, {2, 1, 4, 2}, {3, 1, 5, 1}};
                 });
    b.fixed("Z5_5", 5, t2, 2, 3, 3,
            {{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 5, 1}, {2, 1, 4, 2}, {3, 3, 5, 1}});
    b.fixed("Z5_6", 5, t2, 2, 3, 3, {{1, 1, 2, 1}, {1, 2, 4, 1}, {3, 3, 5, 1}, {2, 1, 4, 2}});
    b.fixed("Z5_7", 5, t2, 2, 3, 3,
            {{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 4, 1}, {2, 1, 4, 2}, {3, 3, 5, 1}});
    b.fixed("Z5_8", 5, t2, 2, 3, 3,
            {{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 4, 1}, {1, 3, 5, 1}, {2, 1, 4, 2}, {3, 3, 5, 1}});
    b.fixed("Z5_9", 5, t2, 2, 4, 4,
            {{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 5, 1}, {2, 1, 4, 2}, {3, 1, 4, 1}, {3, 1, 5, 2}});
    b.fixed("Z5_10", 5, t2, 2, 3, 3,
            {{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 5, 1}, {2, 1, 4, 2}, {3, 3, 4, 1}});
    b.parametric("Z5_11", 5, t2, 2, ParamPredicate::always(),
                 {{ParamPredicate::always(), 3, 3}},
                 [](const Rational& a) {
                     return std::vector<ProductTerm>{{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 5, a},
                                                     {2, 1, 4, 2}, {3, 1, 5, 1}, {3, 3, 4, 1}};
                 });
    b.fixed("Z5_12", 5, t2, 2, 3, 3, {{1, 2, 3, 1}, {1, 3, 4, 1}, {2, 1, 3, -1}, {2, 2, 4, 1}});
    b.fixed("Z5_13", 5, t2, 2, 4, 4, {{1, 2, 3, 1}, {1, 3, 4, 1}, {2, 1, 3, -1}});
    b.fixed("Z5_14", 5, t2, 2, 4, 4, {{1, 1, 4, 1}, {1, 2, 3, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}});
    b.fixed("Z5_15", 5, t2, 2, 4, 4, {{1, 2, 3, 1}, {1, 2, 4, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}});
    b.fixed("Z5_16", 5, t2, 2, 3, 3, {{1, 2, 3, 1}, {2, 1, 3, -1}, {1, 3, 5, 1}, {2, 2, 4, 1}});
    b.fixed("Z5_17", 5, t2, 2, 3, 3,
            {{1, 1, 4, 1}, {1, 2, 3, 1}, {2, 1, 3, -1}, {1, 3, 5, 1}, {2, 2, 4, 1}});
    b.fixed("Z5_18", 5, t2, 2, 3, 3, {{1, 2, 3, 1}, {2, 1, 3, -1}, {1, 3, 5, 1}, {2, 3, 4, 1}});
    b.fixed("Z5_19", 5, t3, 2, 3, 3,
            {{1, 1, 4, 1}, {1, 2, 3, 1}, {2, 1, 3, -1}, {1, 3, 5, 1}, {2, 3, 4, 1}});
    b.fixed("Z5_20", 5, t3, 2, 3, 3,
            {{1, 2, 3, 1}, {1, 2, 4, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}, {2, 3, 4, 1}});
    b.fixed("Z5_21", 5, t3, 2, 3, 3,
            {{1, 1, 4, 1}, {1, 2, 3, 1}, {2, 1, 3, -1}, {1, 3, 5, 1}, {2, 2, 4, 1}, {2, 3, 4, 1}});
    b.fixed("Z5_22", 5, t3, 2, 3, 3,
            {{1, 1, 4, 1}, {1, 2, 3, 1}, {2, 1, 3, -1}, {1, 3, 5, 1}, {2, 2, 5, 1}});
    b.fixed("Z5_23", 5, t3, 2, 3, 3,
            {{1, 2, 3, 1}, {1, 2, 4, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}, {2, 2, 5, 1}});

    // --- dimension 5, 1-dimensional annihilator ---
    b.fixed("Z5_24", 5, t4, 1, 3, 3,
            {{1, 1, 2, 1}, {1, 2, 5, 1}, {1, 3, 5, 1}, {2, 1, 5, 2}, {4, 4, 5, 1}});
    b.parametric("Z5_25", 5, t4, 1, ParamPredicate::always(),
                 {{ParamPredicate::always(), 3, 3}},
                 [](const Rational& a) {
                     return std::vector<ProductTerm>{
                         {1, 1, 2, 1}, {1, 2, 5, 1}, {2, 1, 5, 2}, {3, 4, 5, 1}, {4, 3, 5, a}};
                 });
    b.fixed("Z5_26", 5, t4, 1, 3, 3,
            {{1, 1, 2, 1}, {1, 2, 5, 1}, {2, 1, 5, 2}, {3, 3, 5, 1}, {3, 4, 5, 1}, {4, 3, 5, -1}});
    b.fixed("Z5_27", 5, t4, 1, 3, 3,
            {{1, 1, 2, 1}, {1, 2, 5, 1}, {1, 4, 5, 1}, {2, 1, 5, 2}, {3, 4, 5, 1}, {4, 3, 5, 2}});
    b.fixed("Z5_28", 5, t4, 1, 3, 3,
            {{1, 1, 3, 1}, {1, 3, 5, 1}, {2, 2, 4, 1}, {2, 4, 5, 1}, {3, 1, 5, 2}, {4, 2, 5, 2}});
    b.fixed("Z5_29", 5, t4, 1, 3, 3, {{1, 2, 3, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}, {2, 4, 5, 1}});
    b.fixed("Z5_30", 5, t4, 1, 4, 4, {{1, 2, 3, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}, {4, 1, 5, 1}});
    b.fixed("Z5_31", 5, t4, 1, 3, 3,
            {{1, 2, 3, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}, {2, 2, 5, 1}, {4, 1, 5, 1}});
    b.fixed("Z5_32", 5, t5, 1, 3, 3,
            {{1, 2, 3, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}, {2, 4, 5, 1}, {4, 1, 5, 1}});
    b.parametric("Z5_33", 5, t5, 1, ParamPredicate::always(),
                 {{ParamPredicate::always(), 3, 3}},
                 [](const Rational& a) {
                     return std::vector<ProductTerm>{
                         {1, 2, 3, 1}, {1, 4, 5, a}, {2, 1, 3, -1}, {2, 3, 5, 1}, {4, 1, 5, 1}};
                 });
    b.fixed("Z5_34", 5, t5, 1, 3, 3,
            {{1, 1, 5, 1}, {1, 2, 3, 1}, {1, 4, 5, -1}, {2, 1, 3, -1}, {2, 3, 5, 1}, {4, 1, 5, 1}});
    b.fixed("Z5_35", 5, t5, 1, 4, 4, {{1, 2, 3, 1}, {2, 1, 3, -1}, {2, 3, 5, 1}, {2, 4, 5, 1}});
    b.fixed("Z5_36", 5, t5, 1, 3, 3,
            {{1, 1, 5, 1}, {1, 2, 3, 1}, {2, 1, 3, -1}, {2, 3, 5, 1}, {4, 4, 5, 1}});
    b.parametric("Z5_37", 5, t5, 1, ParamPredicate::always(),
                 {{ParamPredicate::always(), 3, 3}},
                 [](const Rational& a) {
                     return std::vector<ProductTerm>{{1, 1, 5, a},  {1, 2, 3, 1}, {1, 4, 5, 1},
                                                     {2, 1, 3, -1}, {2, 3, 5, 1}, {4, 4, 5, 1}};
                 });
    b.fixed("Z5_38", 5, t5, 1, 3, 3, {{1, 2, 3, 1}, {2, 1, 3, -1}, {4, 3, 5, 1}});
    b.fixed("Z5_39", 5, t5, 1, 3, 3, {{1, 1, 5, 1}, {1, 2, 3, 1}, {2, 1, 3, -1}, {4, 3, 5, 1}});
    b.fixed("Z5_40", 5, t5, 1, 3, 3, {{1, 2, 3, 1}, {1, 2, 5, 1}, {2, 1, 3, -1}, {4, 3, 5, 1}});
    b.fixed("Z5_41", 5, t5, 1, 3, 3, {{1, 2, 3, 1}, {2, 1, 3, -1}, {2, 4, 5, 1}, {4, 3, 5, 1}});
    b.fixed("Z5_42", 5, t5, 1, 3, 3,
            {{1, 1, 5, 1}, {1, 2, 3, 1}, {2, 1, 3, -1}, {2, 4, 5, 1}, {4, 3, 5, 1}});
    b.fixed("Z5_43", 5, t5, 1, 3, 3,
            {{1, 2, 3, 1}, {1, 2, 5, 1}, {2, 1, 3, -1}, {2, 4, 5, 1}, {4, 3, 5, 1}});
    b.fixed("Z5_44", 5, t5, 1, 3, 3,
            {{1, 2, 3, 1}, {2, 1, 3, -1}, {2, 2, 5, 1}, {2, 4, 5, 1}, {4, 3, 5, 1}});
    b.fixed("Z5_45", 5, t5, 1, 3, 3,
            {{1, 1, 5, 1}, {1, 2, 3, 1}, {2, 1, 3, -1}, {2, 2, 5, 1}, {2, 4, 5, 1}, {4, 3, 5, 1}});
    b.fixed("Z5_46", 5, t5, 1, 3, 3,
            {{1, 2, 3, 1}, {1, 3, 5, 1}, {1, 4, 5, -1}, {2, 1, 4, 1}, {2, 2, 3, -1}, {2, 3, 5, -1},
             {2, 4, 5, 1}, {3, 2, 5, -2}});
    b.fixed("Z5_47", 5, t5, 1, 3, 3,
            {{1, 1, 3, 1}, {1, 2, 4, 1}, {1, 4, 5, -1}, {2, 1, 3, -1}, {2, 2, 4, -1}, {2, 4, 5, 1},
             {3, 2, 5, -1}, {4, 1, 5, -1}, {4, 2, 5, 2}});
    b.fixed("Z5_48", 5, t6, 1, 3, 3,
            {{1, 1, 3, 1}, {1, 1, 5, 1}, {1, 2, 4, 1}, {1, 3, 5, -1}, {1, 4, 5, 1}, {2, 1, 3, -1},
             {2, 2, 4, -1}, {2, 3, 5, 1}, {2, 4, 5, -1}, {3, 1, 5, -2}, {3, 2, 5, 2}, {4, 1, 5, 2},
             {4, 2, 5, -2}});
    b.fixed("Z5_49", 5, t6, 1, 3, 3,
            {{1, 1, 3, 1}, {1, 2, 4, 1}, {1, 3, 5, -1}, {1, 4, 5, 1}, {2, 1, 3, -1}, {2, 2, 4, -1},
             {2, 3, 5, 1}, {2, 4, 5, -1}, {3, 1, 5, -2}, {3, 2, 5, 2}, {4, 1, 5, 2}, {4, 2, 5, -2}});
    b.fixed("Z5_50", 5, t6, 1, 3, 3,
            {{1, 2, 3, 1}, {1, 3, 5, -1}, {1, 4, 5, 1}, {2, 1, 4, 1}, {2, 3, 5, -1}, {2, 4, 5, 1}});
    b.fixed("Z5_51", 5, t6, 1, 3, 3,
            {{1, 2, 3, 1}, {1, 3, 5, -1}, {1, 4, 5, 1}, {2, 1, 4, 1}, {2, 2, 5, 1}});
    b.fixed("Z5_52", 5, t6, 1, 4, 4, {{1, 2, 3, 1}, {1, 3, 5, -1}, {1, 4, 5, 1}, {2, 1, 4, 1}});
    b.parametric("Z5_53", 5, t6, 1, ParamPredicate::neq(-1),
                 {{ParamPredicate::always(), 3, 3}},
                 [](const Rational& a) {
                     Rational a1 = a + Rational(1);
                     return std::vector<ProductTerm>{{1, 2, 4, 1},
                                                     {1, 3, 5, a1},
                                                     {2, 1, 4, a},
                                                     {2, 2, 3, 1},
                                                     {2, 4, 5, Rational(2) * a},
                                                     {3, 1, 5, Rational(2) * a * a1},
                                                     {4, 2, 5, Rational(2) * a1}};
                 });
    b.fixed("Z5_54", 5, t6, 1, 3, 3,
            {{1, 2, 4, 1}, {1, 3, 5, 1}, {2, 1, 5, 1}, {2, 2, 3, 1}, {4, 2, 5, 2}});
    b.fixed("Z5_55", 5, t6, 1, 3, 3,
            {{1, 1, 5, 1}, {1, 2, 4, 1}, {1, 3, 5, kHalf}, {2, 1, 4, -kHalf}, {2, 2, 3, 1},
             {2, 4, 5, -1}, {3, 1, 5, -kHalf}, {4, 2, 5, 1}});
    b.fixed("Z5_56", 5, t6, 1, 3, 3,
            {{1, 2, 4, 1}, {1, 3, 5, kHalf}, {2, 1, 4, -kHalf}, {2, 2, 3, 1}, {2, 3, 5, 1},
             {2, 4, 5, -1}, {3, 1, 5, -kHalf}, {3, 2, 5, 2}, {4, 2, 5, 1}});
    b.fixed("Z5_57", 5, t6, 1, 3, 3,
            {{1, 1, 5, 1}, {1, 2, 4, 1}, {1, 3, 5, kHalf}, {2, 1, 4, -kHalf}, {2, 2, 3, 1},
             {2, 3, 5, 1}, {2, 4, 5, -1}, {3, 1, 5, -kHalf}, {3, 2, 5, 2}, {4, 2, 5, 1}});
    b.fixed("Z5_58", 5, t6, 1, 3, 3,
            {{1, 2, 4, 1}, {1, 4, 5, 1}, {2, 1, 4, -1}, {2, 2, 3, 1}, {2, 3, 5, 1}, {3, 2, 5, 2}});
    b.fixed("Z5_59", 5, t6, 1, 3, 3,
            {{1, 1, 5, 1}, {1, 2, 4, 1}, {2, 1, 4, -1}, {2, 2, 3, 1}, {2, 3, 5, 1}, {2, 4, 5, 1},
             {3, 2, 5, 2}});
    b.fixed("Z5_60", 5, t7, 1, 4, 4,
            {{1, 2, 4, 1}, {2, 1, 4, -1}, {2, 2, 3, 1}, {2, 3, 5, 1}, {2, 4, 5, 1}, {3, 2, 5, 2}});
    b.fixed("Z5_61", 5, t7, 1, 3, 3,
            {{1, 1, 2, 1}, {1, 2, 3, 1}, {1, 3, 5, 1}, {2, 1, 3, 2}, {2, 2, 5, 3}, {3, 1, 5, 3},
             {4, 4, 5, 1}});
    b.fixed("Z5_62", 5, t7, 1, 3, 3,
            {{1, 1, 2, 1}, {1, 2, 3, 1}, {1, 3, 5, 1}, {1, 4, 5, 1}, {2, 1, 3, 2}, {2, 2, 5, 3},
             {3, 1, 5, 3}});
    b.fixed("Z5_63", 5, t7, 1, 3, 3,
            {{1, 1, 2, 1}, {1, 2, 3, kHalf}, {1, 3, 4, 2}, {1, 4, 5, 1}, {2, 1, 3, 1}, {2, 2, 4, 3},
             {2, 3, 5, 8}, {3, 1, 4, 6}, {3, 2, 5, 12}, {4, 1, 5, 4}});
    b.fixed("Z5_64", 5, t7, 1, 4, 4, {{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 5, 1}, {2, 1, 4, 2}});
    b.parametric("Z5_65", 5, t7, 1, ParamPredicate::always(),
                 {{ParamPredicate::always(), 4, 4}},
                 [](const Rational& a) {
                     return std::vector<ProductTerm>{
                         {1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 5, a}, {2, 1, 4, 2}, {3, 1, 5, 1}};
                 });
    b.fixed("Z5_66", 5, t7, 1, 3, 3,
            {{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 5, 1}, {2, 1, 4, 2}, {3, 3, 5, 1}});
    b.fixed("Z5_67", 5, t7, 1, 3, 3, {{1, 1, 2, 1}, {1, 2, 4, 1}, {2, 1, 4, 2}, {3, 3, 5, 1}});
    b.fixed("Z5_68", 5, t7, 1, 3, 3,
            {{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 4, 1}, {2, 1, 4, 2}, {3, 3, 5, 1}});
    b.fixed("Z5_69", 5, t7, 1, 3, 3,
            {{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 4, 1}, {1, 3, 5, 1}, {2, 1, 4, 2}, {3, 3, 5, 1}});
    b.fixed("Z5_70", 5, t7, 1, 4, 4,
            {{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 5, 1}, {2, 1, 4, 2}, {3, 1, 4, 1}, {3, 1, 5, 2}});
    b.fixed("Z5_71", 5, t7, 1, 3, 3,
            {{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 5, 1}, {2, 1, 4, 2}, {3, 3, 4, 1}});
    b.parametric("Z5_72", 5, t7, 1, ParamPredicate::always(),
                 {{ParamPredicate::always(), 3, 3}},
                 [](const Rational& a) {
                     return std::vector<ProductTerm>{{1, 1, 2, 1}, {1, 2, 4, 1}, {1, 3, 5, a},
                                                     {2, 1, 4, 2}, {3, 1, 5, 1}, {3, 3, 4, 1}};
                 });
    b.fixed("Z5_73", 5, t7, 1, 4, 4, {{1, 1, 4, 1}, {1, 2, 3, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}});
    b.fixed("Z5_74", 5, t7, 1, 4, 4, {{1, 2, 3, 1}, {1, 2, 4, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}});
    b.fixed("Z5_75", 5, t8, 1, 3, 3, {{1, 2, 3, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}, {2, 2, 4, 1}});
    b.fixed("Z5_76", 5, t8, 1, 3, 3,
            {{1, 1, 4, 1}, {1, 2, 3, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}, {2, 2, 4, 1}});
    b.fixed("Z5_77", 5, t8, 1, 3, 3, {{1, 2, 3, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}, {2, 3, 4, 1}});
    b.fixed("Z5_78", 5, t8, 1, 3, 3,
            {{1, 1, 4, 1}, {1, 2, 3, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}, {2, 3, 4, 1}});
    b.fixed("Z5_79", 5, t8, 1, 3, 3,
            {{1, 2, 3, 1}, {1, 2, 4, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}, {2, 3, 4, 1}});
    b.fixed("Z5_80", 5, t8, 1, 3, 3,
            {{1, 1, 4, 1}, {1, 2, 3, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}, {2, 2, 4, 1}, {2, 3, 4, 1}});
    b.fixed("Z5_81", 5, t8, 1, 3, 3,
            {{1, 1, 4, 1}, {1, 2, 3, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}, {2, 2, 5, 1}});
    b.fixed("Z5_82", 5, t8, 1, 3, 3,
            {{1, 2, 3, 1}, {1, 2, 4, 1}, {1, 3, 5, 1}, {2, 1, 3, -1}, {2, 2, 5, 1}});

    entries_ = std::move(b.entries);
}

const Catalog& Catalog::instance() {
    static Catalog c;
    return c;
}

const CatalogEntry* Catalog::find(const std::string& id) const {
    for (const auto& e : entries_)
        if (e.id == id) return &e;
    return nullptr;
}

Algebra<RationalField> Catalog::make(const CatalogEntry& entry, const Rational& value) const {
    if (entry.parametric() && !entry.domain.eval(value))
        throw usage_error(entry.id + " excludes " + entry.domain.str(entry.param) +
                          "; got " + entry.param + "=" + value.str());
    Algebra<RationalField> a = algebra_from_terms(entry.dim, entry.id, entry.products(value));
    if (entry.parametric()) {
        a.set_param(entry.param, value);
        a.set_name(entry.id + "(" + entry.param + "=" + value.str() + ")");
    }
    return a;
}

Algebra<RationalField> Catalog::get(const std::string& id,
                                    const std::map<std::string, Rational>& params) const {
    auto to_int = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw usage_error("bad number '" + s + "' in id '" + id + "'");
            return v;
        } catch (const std::logic_error&) {
            throw usage_error("bad number '" + s + "' in id '" + id + "'");
        }
    };
    if (id == "example-3-1") return example_3_1();
    if (id.rfind("NF:", 0) == 0) return null_filiform(to_int(id.substr(3)));
    if (id.rfind("F:", 0) == 0) {
        auto colon = id.find(':', 2);
        if (colon == std::string::npos) throw usage_error("filiform id must look like F:<n>:<variant>");
        return filiform(to_int(id.substr(2, colon - 2)), to_int(id.substr(colon + 1)));
    }
    const CatalogEntry* e = find(id);
    if (!e) throw usage_error("unknown catalog id '" + id + "'");
    if (!e->parametric()) {
        if (!params.empty()) throw usage_error(id + " takes no parameters");
        return make(*e, Rational(0));
    }
    auto it = params.find(e->param);
    if (it == params.end())
        throw usage_error(id + " needs parameter '" + e->param + "'");
    return make(*e, it->second);
}

} // namespace zinbiel
