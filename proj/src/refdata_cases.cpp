// The five embedded regulator cases: curves, kernels, printed isogeny maps,
// twist data, pairing matrices, and L-value assembly directions.

#include "mm/beilinson.hpp"

namespace mm {

namespace {

QuadFieldElem q2(const mpq_class& u, const mpq_class& v = 0) { return {2, u, v}; }
QuadFieldElem q3(const mpq_class& u, const mpq_class& v = 0) { return {3, u, v}; }
QuadFieldElem q7(const mpq_class& u, const mpq_class& v = 0) { return {7, u, v}; }

KPoly mono(std::initializer_list<QuadFieldElem> coeffs_low_to_high) {
    return KPoly(coeffs_low_to_high);
}

CaseData case6() {
    CaseData c;
    c.id = "6";
    c.d = 2;
    c.chart = Chart::eq14;
    c.k2_plus = q2(272, 192);  // (12+8*sqrt2)^2
    c.k_plus_display = "12+8*sqrt(2)";
    c.k_minus_display = "12-8*sqrt(2)";

    c.kernel_two_torsion_x = {q2(0)};
    c.kernel_pair_poly = mono({q2(1), q2(1)});  // x + 1
    c.degree = 4;

    // (X,Y) -> (u^2 X + r, u^3 Y) with u = 3/2 - sqrt2, r = -49/2 + 18 sqrt2.
    c.tw_u2 = q2(mpq_class(17, 4), -3);
    c.tw_u3 = q2(mpq_class(99, 8), mpq_class(-35, 4));
    c.tw_r = q2(mpq_class(-49, 2), 18);

    // X-map (X-1)^2 ((17-12s)X^2 - 6(5-4s)X + 17-12s) / (4X(X+1)^2), s=sqrt2.
    {
        KPoly xm1 = mono({q2(-1), q2(1)});
        KPoly quad = mono({q2(17, -12), q2(-30, 24), q2(17, -12)});
        c.printed_map.xn = kp_mul(kp_mul(xm1, xm1), quad);
        KPoly xp1 = mono({q2(1), q2(1)});
        c.printed_map.xd =
            kp_mul(kp_mul(mono({q2(0), q2(4)}), xp1), xp1);
        // Y-scale (99-70s)(X-1)(X^4+4X^3+(262+192s)X^2+4X+1) / (8X^2(X+1)^3).
        KPoly quart = mono({q2(1), q2(4), q2(262, 192), q2(4), q2(1)});
        c.printed_map.yn = kp_scale(kp_mul(xm1, quart), q2(99, -70));
        c.printed_map.yd = kp_mul(kp_mul(kp_mul(mono({q2(0), q2(0), q2(8)}), xp1), xp1), xp1);
    }

    c.compose_sign = 1;
    c.diff_multiplier = q2(6, 4);  // 1/u

    c.pairing[0][0] = {-1, Side::plus};
    c.pairing[0][1] = {-2, Side::minus};
    c.pairing[1][0] = {-2, Side::minus};
    c.pairing[1][1] = {-4, Side::plus};

    c.reg_const = 4096;
    c.direct_L = true;
    c.form_f = FormSpec::make_eta({{{8, 8}, {4, -2}, {16, -2}}}, 64);
    c.form_g = FormSpec::make_eta({{{4, 2}, {8, 2}}}, 32);
    c.row_L1 = 5;
    c.row_L2 = 6;

    c.lmfdb_curve = "2.2.8.1-32.1-a8";
    c.lmfdb_form = "4-2e11-1.1-c1e2-0-0";
    return c;
}

CaseData case71() {
    CaseData c;
    c.id = "7.1";
    c.d = 3;
    c.chart = Chart::eq71;
    c.k2_plus = q3(8, 4);  // (sqrt2+sqrt6)^2
    c.k_minus_sign = -1;   // k_minus = sqrt2 - sqrt6 < 0
    c.k_plus_display = "sqrt(2)+sqrt(6)";
    c.k_minus_display = "sqrt(2)-sqrt(6)";

    c.kernel_pair_poly = mono({q3(0, mpq_class(2, 3)), q3(1)});  // x + 2 sqrt3 / 3
    c.degree = 3;

    c.tw_u2 = q3(mpq_class(1, 3));
    c.tw_u3 = q3(0, mpq_class(1, 9));   // sqrt3 / 9
    c.tw_r = q3(0, mpq_class(8, 9));    // matches a2 -> sigma(a2)

    // X-map 3X(X^2 + 4 sqrt3 X + 12) / (3X + 2 sqrt3)^2.
    {
        KPoly lin = mono({q3(0, 2), q3(3)});
        c.printed_map.xn = kp_mul(mono({q3(0), q3(3)}), mono({q3(12), q3(0, 4), q3(1)}));
        c.printed_map.xd = kp_mul(lin, lin);
        // Y-scale 3 sqrt3 (X + 2 sqrt3)(X^2 + 4) / (3X + 2 sqrt3)^3.
        c.printed_map.yn =
            kp_scale(kp_mul(mono({q3(0, 2), q3(1)}), mono({q3(4), q3(0), q3(1)})), q3(0, 3));
        c.printed_map.yd = kp_mul(kp_mul(lin, lin), lin);
    }

    c.compose_sign = -1;
    c.diff_multiplier = q3(0, 1);  // sqrt3

    c.pairing[0][0] = {4, Side::plus};
    c.pairing[0][1] = {4, Side::minus};
    c.pairing[1][0] = {12, Side::minus};
    c.pairing[1][1] = {-4, Side::plus};

    c.reg_const = 2304;
    c.row_L1 = 17;
    c.row_L2 = 18;
    c.al_u = mpq_class(1, 2);
    c.al_v = mpq_class(1, 6);  // (3 + i sqrt3)/6
    c.be_u = mpq_class(1, 2);
    c.be_v = mpq_class(-1, 2);  // (1 - i sqrt3)/2

    c.lmfdb_curve = "2.2.12.1-16.1-a1";
    c.lmfdb_form = "48.2.c.a.47.1";
    return c;
}

CaseData case72() {
    CaseData c;
    c.id = "7.2";
    c.d = 3;
    c.chart = Chart::eq71;
    c.k2_plus = q3(128, 64);  // (4 sqrt2 + 4 sqrt6)^2
    c.k_plus_display = "4*sqrt(2)+4*sqrt(6)";
    c.k_minus_display = "4*sqrt(2)-4*sqrt(6)";

    c.kernel_pair_poly = mono({q3(2, mpq_class(-4, 3)), q3(1)});  // x + (6-4 sqrt3)/3
    c.degree = 3;

    c.tw_u2 = q3(mpq_class(7, 3), mpq_class(-4, 3));
    c.tw_u3 = q3(-5, mpq_class(26, 9));      // (26 sqrt3 - 45)/9
    c.tw_r = q3(-16, mpq_class(80, 9));      // matches a2 -> sigma(a2)

    // X-map 3X((7-4s)X^2 + (12-8s)X + 12) / (3X + 6 - 4s)^2, s = sqrt3.
    {
        KPoly lin = mono({q3(6, -4), q3(3)});
        c.printed_map.xn =
            kp_mul(mono({q3(0), q3(3)}), mono({q3(12), q3(12, -8), q3(7, -4)}));
        c.printed_map.xd = kp_mul(lin, lin);
        // Y-scale (2s-3)^3 (X - 6 - 4s)(X^2 + 12X + 4) / (3X + 6 - 4s)^3.
        c.printed_map.yn = kp_scale(
            kp_mul(mono({q3(-6, -4), q3(1)}), mono({q3(4), q3(12), q3(1)})), q3(-135, 78));
        c.printed_map.yd = kp_mul(kp_mul(lin, lin), lin);
    }

    c.compose_sign = -1;
    c.diff_multiplier = q3(3, 2);  // 3 + 2 sqrt3

    c.pairing[0][0] = {2, Side::plus};
    c.pairing[0][1] = {2, Side::minus};
    c.pairing[1][0] = {-2, Side::minus};
    c.pairing[1][1] = {6, Side::plus};

    c.reg_const = 9216;
    c.row_L1 = 19;
    c.row_L2 = 20;
    c.al_u = mpq_class(1, 2);
    c.al_v = 0;  // (f+g)/2
    c.be_u = 0;
    c.be_v = mpq_class(1, 6);  // coefficient of f in (g-f)/(2 i sqrt3)

    c.lmfdb_curve = "2.2.12.1-256.1-c8";
    c.lmfdb_form = "192.2.c.a.191.1";
    return c;
}

CaseData case73() {
    CaseData c;
    c.id = "7.3";
    c.d = 7;
    c.chart = Chart::eq71;
    c.k2_plus = q7(8, 3);  // ((3 sqrt2 + sqrt14)/2)^2
    c.k_plus_display = "3*sqrt(2)/2+sqrt(14)/2";
    c.k_minus_display = "3*sqrt(2)/2-sqrt(14)/2";

    // (7x^3 + 14 sqrt7 x^2 + 56x + 8 sqrt7)/7, made monic.
    c.kernel_pair_poly = mono({q7(0, mpq_class(8, 7)), q7(8), q7(0, 2), q7(1)});
    c.degree = 7;

    c.tw_u2 = q7(mpq_class(1, 7));
    c.tw_u3 = q7(0, mpq_class(1, 49));  // sqrt7 / 49
    c.tw_r = q7(0, mpq_class(4, 7));    // matches a2 -> sigma(a2)

    {
        KPoly f1 = mono({q7(0, 8), q7(56), q7(0, 14), q7(7)});
        KPoly f2 = mono({q7(448), q7(0, 448), q7(1232), q7(0, 240), q7(168), q7(0, 8), q7(1)});
        KPoly f3 = mono({q7(0, 512), q7(3584), q7(0, 1536), q7(2752), q7(0, 544), q7(720),
                         q7(0, 120), q7(96), q7(0, 6), q7(1)});
        c.printed_map.xn = kp_mul(mono({q7(0), q7(7)}), f2);
        c.printed_map.xd = kp_mul(f1, f1);
        c.printed_map.yn = kp_scale(f3, q7(0, 7));  // 7 sqrt7
        c.printed_map.yd = kp_mul(kp_mul(f1, f1), f1);
    }

    c.compose_sign = -1;
    c.diff_multiplier = q7(0, 1);  // sqrt7

    c.pairing[0][0] = {4, Side::plus};
    c.pairing[0][1] = {4, Side::minus};
    c.pairing[1][0] = {28, Side::minus};
    c.pairing[1][1] = {-4, Side::plus};

    c.reg_const = 3136;
    c.row_L1 = 25;
    c.row_L2 = 26;
    // alpha1/4 + beta1/16 = (21 + i sqrt7)/112, alpha2/4 + beta2/16 = (-1 + i sqrt7)/16.
    c.al_u = mpq_class(3, 16);
    c.al_v = mpq_class(1, 112);
    // (-1 + 3 i sqrt7)/16; the only choice with 7 a^2 + b^2 = 0 and
    // 14|a|^2 + 2|b|^2 = 1, which the determinant identity requires.
    c.be_u = mpq_class(-1, 16);
    c.be_v = mpq_class(3, 16);

    c.lmfdb_curve = "2.2.28.1-1.1-a2";
    c.lmfdb_form = "28.2.d.a.27.1";
    return c;
}

CaseData case74() {
    CaseData c;
    c.id = "7.4";
    c.d = 7;
    c.chart = Chart::eq71;
    c.k2_plus = q7(2048, 768);  // (24 sqrt2 + 8 sqrt14)^2
    c.k_plus_display = "24*sqrt(2)+8*sqrt(14)";
    c.k_minus_display = "24*sqrt(2)-8*sqrt(14)";

    // (7x^3 - 14(15+8 sqrt7)x^2 + 308x + 8(21-8 sqrt7))/7, made monic.
    c.kernel_pair_poly =
        mono({q7(24, mpq_class(-64, 7)), q7(44), q7(-30, -16), q7(1)});
    c.degree = 7;

    c.tw_u2 = q7(mpq_class(127, 7), mpq_class(-48, 7));     // (21-8 sqrt7)^2 / 7
    c.tw_u3 = q7(mpq_class(-37485, 343), mpq_class(14168, 343));  // -(21-8 sqrt7)^3/343
    c.tw_r = q7(mpq_class(-2208, 7), mpq_class(832, 7));          // a2 -> sigma(a2)

    {
        KPoly f1 = mono({q7(168, -64), q7(308), q7(-210, -112), q7(7)});
        KPoly f2 = mono({q7(448), q7(-6720, -3584), q7(77840, 26880), q7(-18144, -9984),
                         q7(4452, -384), q7(924, -352), q7(127, -48)});
        KPoly f3 = mono({q7(-10752, -4096), q7(-1722112, -651264), q7(1580544, 595968),
                         q7(538706176, 203609088), q7(878164800, 331912192),
                         q7(852192, 320256), q7(-20407968, -7714176),
                         q7(-301872, -114240), q7(-90, -48), q7(1)});
        c.printed_map.xn = kp_mul(mono({q7(0), q7(7)}), f2);
        c.printed_map.xd = kp_mul(f1, f1);
        c.printed_map.yn = kp_scale(f3, q7(-37485, 14168));  // -(21-8 sqrt7)^3
        c.printed_map.yd = kp_mul(kp_mul(f1, f1), f1);
    }

    c.compose_sign = -1;
    c.diff_multiplier = q7(21, 8);  // 21 + 8 sqrt7

    c.pairing[0][0] = {2, Side::plus};
    c.pairing[0][1] = {2, Side::minus};
    c.pairing[1][0] = {2, Side::minus};
    c.pairing[1][1] = {-14, Side::plus};

    c.reg_const = 50176;
    c.row_L1 = 27;
    c.row_L2 = 28;
    c.al_u = mpq_class(1, 2);
    c.al_v = 0;
    c.be_u = 0;
    c.be_v = mpq_class(1, 14);  // coefficient of f in (g-f)/(2 i sqrt7)

    c.lmfdb_curve = "2.2.28.1-256.1-j8";
    c.lmfdb_form = "448.2.f.b.447.1";
    return c;
}

}  // namespace

const std::vector<CaseData>& regulator_cases() {
    static const std::vector<CaseData> cases = {case6(), case71(), case72(), case73(),
                                                case74()};
    return cases;
}

const CaseData& regulator_case_by_id(const std::string& id) {
    for (const auto& c : regulator_cases())
        if (c.id == id) return c;
    throw NotFound("unknown regulator case id: " + id);
}

}  // namespace mm
