#!/usr/bin/env python3
"""Generate frozen reference values (50-digit arithmetic, printed to 17
significant digits) for the C++ unit tests."""
import mpmath as mp

mp.mp.dps = 50


def p(name, v):
    print(f"{name: <28s} = {mp.nstr(mp.mpf(v), 17)};")


half = mp.mpf(1) / 2
p("gamma_half", mp.gamma(half))
p("gamma_ratio_225_175", mp.gamma("2.25") / mp.gamma("1.75"))
p("d_lambda_025", 2 ** mp.mpf("0.5") * mp.gamma("0.75") / mp.gamma("0.25"))
p("c_lambda_03", 2 ** mp.mpf("0.6") * mp.gamma("0.3") / mp.gamma("-0.3"))
p("digamma_1", mp.digamma(1))
p("hyp2f1_pin", mp.hyp2f1("0.8", "1.8", "1.5", "-3.7"))
p("lambda1_n2_l03", mp.gamma("1.8") / mp.gamma("1.2"))
p("lambda1_n3_l025", mp.gamma("2.25") / mp.gamma("1.75"))
p("dtn_n2_l03_xi2_sm", -(2 ** mp.mpf("0.6")))
F = mp.gamma("3.5") / mp.gamma(half)
p("q_op_n3_k1", -F * (mp.digamma("3.5") + mp.digamma(half)))
p("tricomi_u_03_16_2", mp.hyperu("0.3", "1.6", 2))
p("tricomi_u_13_16_20", mp.hyperu("1.3", "1.6", 20))
p("tricomi_u_07_24_60", mp.hyperu("0.7", "2.4", 60))
p("kummer_m_03_16_2", mp.hyp1f1("0.3", "1.6", 2))
p("digamma_35", mp.digamma("3.5"))
p("gamma_doubling_rhs", (2 * mp.pi) ** (-half) * 2 ** (2 * mp.mpf("1.3") - half)
  * mp.gamma("1.3") * mp.gamma("1.8"))  # = Gamma(2.6)
p("gamma_26", mp.gamma("2.6"))
