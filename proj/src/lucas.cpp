#include "congru/lucas.hpp"

namespace congru {

LucasPair lucas_uv(i64 b_in, i64 c_in, u64 n, u64 m) {
    const Residue b = reduce(b_in, m), c = reduce(c_in, m);
    const Residue two = 2 % m;
    if (m % 2 == 0) throw std::invalid_argument("lucas_uv needs an odd modulus");
    const Residue inv2 = (m + 1) / 2;
    const Residue d = sub_mod(mul_mod(b, b, m), mul_mod(4 % m, c, m), m);

    // Walk the bits of n from the top, keeping (U_k, V_k, c^k).
    Residue u = 0, v = two, q = 1 % m;
    int top = 63;
    while (top >= 0 && !((n >> top) & 1)) --top;
    for (int i = top; i >= 0; --i) {
        // k -> 2k
        Residue u2 = mul_mod(u, v, m);
        Residue v2 = sub_mod(mul_mod(v, v, m), mul_mod(two, q, m), m);
        u = u2;
        v = v2;
        q = mul_mod(q, q, m);
        if ((n >> i) & 1) {
            // k -> k+1 : U' = (bU + V)/2, V' = (dU + bV)/2
            Residue nu = add_mod(mul_mod(b, u, m), v, m);
            Residue nv = add_mod(mul_mod(d, u, m), mul_mod(b, v, m), m);
            u = mul_mod(nu, inv2, m);
            v = mul_mod(nv, inv2, m);
            q = mul_mod(q, c, m);
        }
    }
    return {u, v, q, n, b_in, c_in};
}

std::vector<LucasPair> lucas_stream(i64 b_in, i64 c_in, u64 n_max, u64 m) {
    const Residue b = reduce(b_in, m), c = reduce(c_in, m);
    std::vector<LucasPair> out;
    out.reserve(n_max + 1);
    Residue u0 = 0, u1 = 1 % m, v0 = 2 % m, v1 = b, q = 1 % m;
    for (u64 k = 0; k <= n_max; ++k) {
        out.push_back({u0, v0, q, k, b_in, c_in});
        Residue u2 = sub_mod(mul_mod(b, u1, m), mul_mod(c, u0, m), m);
        Residue v2 = sub_mod(mul_mod(b, v1, m), mul_mod(c, v0, m), m);
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
        q = mul_mod(q, c, m);
    }
    return out;
}

}  // namespace congru
