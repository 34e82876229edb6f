#include "ghcat/catalog.hpp"

#include <cmath>

namespace ghcat {

namespace {

SolutionTriple make_z1() {
    SolutionTriple s(Group({1}));
    const double d = s.d();  // (1+sqrt(5))/2
    s.set_a(0, 0, 0, Complex{-1.0 / d, 0.0});
    return s;
}

SolutionTriple make_z2_a7() {
    SolutionTriple s(Group({2}));
    const double d = s.d();  // 1+sqrt(2)
    s.set_eps(1, 1, -1);
    const double u = 1.0 / (d - 1.0);
    const double m0[2][2] = {{d - 2.0, -1.0}, {-1.0, -1.0}};
    const double m1[2][2] = {{d - 2.0, -1.0}, {-1.0, 1.0}};
    for (int h = 0; h < 2; ++h)
        for (int k = 0; k < 2; ++k) {
            s.set_a(0, h, k, Complex{u * m0[h][k], 0.0});
            s.set_a(1, h, k, Complex{u * m1[h][k], 0.0});
        }
    return s;
}

SolutionTriple make_z3(double x0, double x1, double x2, Complex y) {
    SolutionTriple s(Group({3}));
    const Complex m[3][3] = {{{x0, 0}, {x1, 0}, {x2, 0}},
                             {{x1, 0}, {x2, 0}, y},
                             {{x2, 0}, std::conj(y), {x1, 0}}};
    for (int g = 0; g < 3; ++g)
        for (int h = 0; h < 3; ++h)
            for (int k = 0; k < 3; ++k) s.set_a(g, h, k, m[h][k]);
    return s;
}

SolutionTriple make_z3_haagerup(bool conj_branch) {
    const double d = Group({3}).dvalue();  // (3+sqrt(13))/2
    const double x0 = (d - 2.0) / (d - 1.0);
    const double x1 = -1.0 / (d - 1.0);
    Complex y{1.0 / (2.0 * (d - 1.0)), std::sqrt(4.0 * d - 1.0) / (2.0 * (d - 1.0))};
    if (conj_branch) y = std::conj(y);
    return make_z3(x0, x1, x1, y);
}

SolutionTriple make_z3_accompanying() {
    const double r13 = std::sqrt(13.0);
    const double x0 = (2.0 - r13) / 3.0;
    const double s6 = std::sqrt(6.0 * (1.0 + r13));
    const double x1 = (5.0 - r13 + s6) / 12.0;
    const double x2 = (5.0 - r13 - s6) / 12.0;
    const double y = (1.0 + r13) / 6.0;
    return make_z3(x0, x1, x2, Complex{y, 0.0});
}

// Z4 family from the sign ansatz: eps_2(g) = e^g, eps_1(3) = eps_3(1) = e.
SolutionTriple make_z4(double x0, double x1, double x2, double x3, Complex y, int e) {
    SolutionTriple s(Group({4}));
    s.set_eps(1, 3, e);
    s.set_eps(3, 1, e);
    for (int g = 0; g < 4; ++g) s.set_eps(2, g, (g % 2) ? e : 1);
    const double de = e;
    const Complex yb = std::conj(y);
    const Complex m[4][4][4] = {
        {{{x0, 0}, {x1, 0}, {x2, 0}, {x3, 0}},
         {{x1, 0}, {x3, 0}, y, de * y},
         {{x2, 0}, yb, {x2, 0}, y},
         {{x3, 0}, de * yb, yb, {x1, 0}}},
        {{{x0, 0}, {x1, 0}, {x2, 0}, {x3, 0}},
         {{x1, 0}, {x3, 0}, y, y},
         {{x2, 0}, yb, {de * x2, 0}, de * y},
         {{x3, 0}, yb, de * yb, {de * x1, 0}}},
        {{{x0, 0}, {x1, 0}, {x2, 0}, {x3, 0}},
         {{x1, 0}, {x3, 0}, de * y, y},
         {{x2, 0}, de * yb, {x2, 0}, de * y},
         {{x3, 0}, yb, de * yb, {x1, 0}}},
        {{{x0, 0}, {x1, 0}, {x2, 0}, {x3, 0}},
         {{x1, 0}, {de * x3, 0}, de * y, y},
         {{x2, 0}, de * yb, {de * x2, 0}, y},
         {{x3, 0}, yb, yb, {x1, 0}}},
    };
    for (int g = 0; g < 4; ++g)
        for (int h = 0; h < 4; ++h)
            for (int k = 0; k < 4; ++k) s.set_a(g, h, k, m[g][h][k]);
    return s;
}

SolutionTriple make_z4_qsystem() {
    const double d = Group({4}).dvalue();  // 2+sqrt(5)
    const double u = -1.0 / (d - 1.0);
    const Complex z{-(d - 1.0) / 2.0, std::sqrt((d - 1.0) / 2.0)};
    return make_z4(1.0 + u, u, u, u, z / (d - 1.0), -1);
}

SolutionTriple make_z4_accompanying() {
    const double r5 = std::sqrt(5.0);
    const double w = std::sqrt(2.0 * (r5 - 1.0));
    return make_z4((2.0 - r5) / 2.0, (1.0 - r5 + w) / 4.0, 0.5, (1.0 - r5 - w) / 4.0,
                   Complex{-0.5, 0.0}, -1);
}

}  // namespace

SolutionTriple make_z2x2(int s_sign, int z_quarter) {
    if (s_sign != 1 && s_sign != -1) throw error::precondition("s must be +1 or -1");
    SolutionTriple s(Group({2, 2}));
    const double d = s.d();  // 2+sqrt(5)
    const double sg = s_sign;
    // chi[h][g] = eps_h(g), a bicharacter on {0,a,b,c}.
    const double chi[4][4] = {{1, 1, 1, 1},
                              {1, -1, sg, -sg},
                              {1, -sg, -1, sg},
                              {1, sg, -sg, -1}};
    for (int h = 0; h < 4; ++h)
        for (int g = 0; g < 4; ++g) s.set_eps(h, g, static_cast<int>(chi[h][g]));

    const Complex i_unit{0.0, 1.0};
    Complex z = std::sqrt(d);
    for (int q = 0; q < ((z_quarter % 4) + 4) % 4; ++q) z *= i_unit;
    const Complex zb = std::conj(z);
    const double top = d - 2.0;
    const Complex m[4][4][4] = {
        {{{top, 0}, {-1, 0}, {-1, 0}, {-1, 0}},
         {{-1, 0}, {-1, 0}, z, zb},
         {{-1, 0}, zb, {-1, 0}, z},
         {{-1, 0}, z, zb, {-1, 0}}},
        {{{top, 0}, {-1, 0}, {-1, 0}, {-1, 0}},
         {{-1, 0}, {1, 0}, chi[1][2] * z, chi[1][3] * zb},
         {{-1, 0}, chi[1][2] * zb, {-chi[2][1], 0}, -z},
         {{-1, 0}, chi[1][3] * z, -zb, {-chi[3][1], 0}}},
        {{{top, 0}, {-1, 0}, {-1, 0}, {-1, 0}},
         {{-1, 0}, {-chi[1][2], 0}, chi[2][1] * z, -zb},
         {{-1, 0}, chi[2][1] * zb, {1, 0}, chi[2][3] * z},
         {{-1, 0}, -z, chi[2][3] * zb, {-chi[3][2], 0}}},
        {{{top, 0}, {-1, 0}, {-1, 0}, {-1, 0}},
         {{-1, 0}, {-chi[1][3], 0}, -z, chi[3][1] * zb},
         {{-1, 0}, -zb, {-chi[2][3], 0}, chi[3][2] * z},
         {{-1, 0}, chi[3][1] * z, chi[3][2] * zb, {1, 0}}},
    };
    const double u = 1.0 / (d - 1.0);
    for (int g = 0; g < 4; ++g)
        for (int h = 0; h < 4; ++h)
            for (int k = 0; k < 4; ++k) s.set_a(g, h, k, u * m[g][h][k]);
    return s;
}

std::vector<std::string> catalog_list() {
    return {"Z1-fib",          "Z2-a7",         "Z3-haagerup", "Z3-haagerup-conj",
            "Z3-accompanying", "Z4-qsystem",    "Z4-accompanying",
            "Z2x2",            "Z2x2-s-1",      "Z2x2-zi",     "Z2x2-s-1-zi"};
}

CatalogEntry catalog_get(const std::string& name) {
    if (name == "Z1-fib") {
        return {name,
                "trivial group, d = (1+sqrt(5))/2, A(0,0) = -1/d",
                {},
                true,
                true,
                make_z1()};
    }
    if (name == "Z2-a7") {
        return {name,
                "d = 1+sqrt(2), eps_h(g) = (-1)^{gh}, eta = 1; the even part of the A7 "
                "subfactor",
                {},
                true,
                true,
                make_z2_a7()};
    }
    if (name == "Z3-haagerup" || name == "Z3-haagerup-conj") {
        return {name,
                "d = (3+sqrt(13))/2, x0 = (d-2)/(d-1), x1 = x2 = -1/(d-1), "
                "y = (1 +/- i sqrt(4d-1)) / (2(d-1)); the Haagerup subfactor data",
                {},
                true,
                true,
                make_z3_haagerup(name == "Z3-haagerup-conj")};
    }
    if (name == "Z3-accompanying") {
        return {name,
                "d = (3+sqrt(13))/2, x0 = (2-sqrt(13))/3, "
                "x1,x2 = (5-sqrt(13) +/- sqrt(6(1+sqrt(13))))/12, y = (1+sqrt(13))/6",
                {"y = -x1 x2/(x1+x2) = (1+sqrt(13))/6; the value (1+sqrt(13))/2 sometimes "
                 "quoted for this family fails y^2 = 1-x1^2-x2^2 and is corrected here."},
                false,
                false,
                make_z3_accompanying()};
    }
    if (name == "Z4-qsystem") {
        return {name,
                "d = 2+sqrt(5), Q-system branch: x = -1/(d-1) pattern, "
                "z = -(1+sqrt(5))/2 + i sqrt((1+sqrt(5))/2), eps sign -1",
                {},
                true,
                true,
                make_z4_qsystem()};
    }
    if (name == "Z4-accompanying") {
        return {name,
                "d = 2+sqrt(5), x = ((2-sqrt(5))/2, (1-sqrt(5)+sqrt(2(sqrt(5)-1)))/4, 1/2, "
                "(1-sqrt(5)-sqrt(2(sqrt(5)-1)))/4), y = -1/2, eps sign -1",
                {},
                false,
                false,
                make_z4_accompanying()};
    }
    if (name == "Z2x2") {
        return {name, "d = 2+sqrt(5), s = +1, z = sqrt(d)", {}, true, true, make_z2x2(1, 0)};
    }
    if (name == "Z2x2-s-1") {
        return {name, "d = 2+sqrt(5), s = -1, z = sqrt(d)", {}, true, true, make_z2x2(-1, 0)};
    }
    if (name == "Z2x2-zi") {
        return {name, "d = 2+sqrt(5), s = +1, z = i sqrt(d)", {}, true, true, make_z2x2(1, 1)};
    }
    if (name == "Z2x2-s-1-zi") {
        return {name, "d = 2+sqrt(5), s = -1, z = i sqrt(d)", {}, true, true, make_z2x2(-1, 1)};
    }
    std::string names;
    for (const auto& n : catalog_list()) names += (names.empty() ? "" : ", ") + n;
    throw error::lookup("unknown catalog entry '" + name + "' (known: " + names + ")");
}

}  // namespace ghcat
