// The 35 identities m(k) = (c_r sqrt(c_s)/pi^2) L(f,2), with f a theta
// series (1/scale-normalized) sum chi_{-4}(n) (alpha m + beta n) q^{Q(m,n)}.

#include "mm/lvalues.hpp"

namespace mm {

namespace {

IdentityRecord row(const std::string& disp, const mpq_class& ku, const mpq_class& kv,
                   long kd, const mpq_class& cr, long cs, long level,
                   const mpq_class& scale, long alpha, long beta, long A, long B, long C) {
    IdentityRecord r;
    r.k_display = disp;
    r.ku = ku;
    r.kv = kv;
    r.kd = kd;
    r.c_r = cr;
    r.c_s = cs;
    r.level = level;
    r.form.A = A;
    r.form.B = B;
    r.form.C = C;
    r.form.alpha = alpha;
    r.form.beta = beta;
    r.form.slot = ThetaSpec::CharSlot::N;
    r.form.scale = scale;
    return r;
}

mpq_class q(long n, long d) { return mpq_class(n, d); }

std::vector<IdentityRecord> build() {
    std::vector<IdentityRecord> t;
    t.push_back(row("4*I", -16, 0, 1, 16, 1, 32, q(1, 2), 2, 1, 8, 4, 1));
    t.push_back(row("4*sqrt(2)", 32, 0, 1, 16, 1, 64, q(1, 2), 0, 1, 4, 0, 1));
    t.push_back(row("2*sqrt(2)", 8, 0, 1, 8, 1, 32, q(1, 2), 1, 1, 2, 2, 1));
    t.push_back(row("8^(1/4)*(sqrt(2)-1)*I", 8, -6, 2, 8, 1, 64, q(1, 2), -2, 1, 5, -4, 1));
    t.push_back(row("8^(1/4)*(sqrt(2)+1)", 8, 6, 2, 8, 1, 64, q(1, 2), 0, 1, 1, 0, 1));
    t.push_back(row("12+8*sqrt(2)", 272, 192, 2, 32, 1, 64, q(1, 2), 0, 1, 16, 0, 1));
    t.push_back(row("12-8*sqrt(2)", 272, -192, 2, 64, 1, 64, q(1, 4), 8, 5, 16, 16, 5));
    t.push_back(row("8*I*sqrt(4+3*sqrt(2))", -256, -192, 2, 32, 1, 256, q(1, 2), 2, 1, 20, 4, 1));
    t.push_back(row("8*sqrt(3*sqrt(2)-4)", -256, 192, 2, 256, 1, 256, q(1, 16), 2, 5, 4, 4, 5));
    t.push_back(row("4*I/sqrt(2*sqrt(2)+2)", 8, -8, 2, 8, 2, 64, q(1, 2), -2, 1, 6, -4, 1));
    t.push_back(row("4/sqrt(2*sqrt(2)-2)", 8, 8, 2, 8, 2, 64, q(1, 2), 0, 1, 2, 0, 1));
    t.push_back(row("4+4*sqrt(2)", 48, 32, 2, 16, 2, 64, q(1, 2), 0, 1, 8, 0, 1));
    t.push_back(row("4-4*sqrt(2)", 48, -32, 2, 32, 2, 64, q(-1, 4), 4, -3, 8, -8, 3));
    t.push_back(row("4*I*sqrt(2+2*sqrt(2))", -32, -32, 2, 16, 2, 128, q(1, 2), -2, 1, 12, -4, 1));
    t.push_back(row("4*sqrt(2*sqrt(2)-2)", -32, 32, 2, 64, 2, 128, q(-1, 8), 2, -3, 4, -4, 3));
    t.push_back(row("(8-4*sqrt(3))*I", -112, 64, 3, 48, 3, 48, q(-1, 2), 2, -1, 16, -12, 3));
    t.push_back(row("(8+4*sqrt(3))*I", -112, -64, 3, 16, 3, 48, q(-1, 2), 2, -1, 16, -4, 1));
    t.push_back(row("sqrt(2)+sqrt(6)", 8, 4, 3, 6, 3, 48, q(-1, 6), 1, -2, 1, -1, 1));
    t.push_back(row("sqrt(2)-sqrt(6)", 8, -4, 3, 2, 3, 48, q(-1, 2), 3, -2, 3, -3, 1));
    t.push_back(row("4*sqrt(2)+4*sqrt(6)", 128, 64, 3, 16, 3, 192, q(1, 2), 0, 1, 12, 0, 1));
    t.push_back(row("4*sqrt(2)-4*sqrt(6)", 128, -64, 3, 48, 3, 192, q(1, 2), 0, 1, 4, 0, 3));
    t.push_back(row("2*sqrt(3)+2*I", 8, 8, -3, 8, 3, 48, q(-1, 2), 1, -1, 4, -2, 1));
    t.push_back(row("2*sqrt(3)-2*I", 8, -8, -3, 8, 3, 48, q(1, 2), 1, 1, 4, 2, 1));
    t.push_back(row("(32-12*sqrt(7))*I", -2032, 768, 7, 112, 7, 112, q(-1, 2), 2, -1, 32, -28, 7));
    t.push_back(row("(32+12*sqrt(7))*I", -2032, -768, 7, 16, 7, 112, q(-1, 2), 2, -1, 32, -4, 1));
    t.push_back(row("3*sqrt(2)/2+sqrt(14)/2", 8, 3, 7, 14, 7, 112, q(-1, 14), 1, -4, 1, -1, 2));
    t.push_back(row("3*sqrt(2)/2-sqrt(14)/2", 8, -3, 7, 2, 7, 112, q(-1, 2), 7, -4, 7, -7, 2));
    t.push_back(row("24*sqrt(2)+8*sqrt(14)", 2048, 768, 7, 16, 7, 448, q(1, 2), 0, 1, 28, 0, 1));
    t.push_back(row("24*sqrt(2)-8*sqrt(14)", 2048, -768, 7, 112, 7, 448, q(1, 2), 0, 1, 4, 0, 7));
    t.push_back(row("6+2*I*sqrt(7)", 8, 24, -7, 8, 7, 56, q(-1, 2), 1, -1, 8, -2, 1));
    t.push_back(row("6-2*I*sqrt(7)", 8, -24, -7, 8, 7, 56, q(1, 2), 1, 1, 8, 2, 1));
    t.push_back(row("3/2+I*sqrt(7)/2", q(1, 2), q(3, 2), -7, 4, 7, 28, q(-1, 4), 3, -2, 4, -3, 1));
    t.push_back(row("3/2-I*sqrt(7)/2", q(1, 2), q(-3, 2), -7, 4, 7, 28, q(1, 4), 3, 2, 4, 3, 1));
    t.push_back(row("3*sqrt(7)/2+I/2", q(31, 2), q(3, 2), -7, 4, 7, 56, q(-1, 4), 1, -2, 2, -1, 1));
    t.push_back(row("3*sqrt(7)/2-I/2", q(31, 2), q(-3, 2), -7, 4, 7, 56, q(1, 4), 1, 2, 2, 1, 1));
    return t;
}

}  // namespace

const std::vector<IdentityRecord>& identity_table() {
    static const std::vector<IdentityRecord> t = build();
    return t;
}

}  // namespace mm
