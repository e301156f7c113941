// Golden values for the casebook entries. Each value carries an "origin":
//   worked-example    reproduces the p(x,x,y) ~ q(x,y,y) example verbatim
//   dual              obtained from a worked example by exchanging meet and join
//   oracle-validated  computed, then confirmed with the free-order decision
//                     procedure before being frozen here
//   direct            follows by inspection from the definitions
// Term values are stored in canonical printed form.

namespace freelat::detail {

extern const char* const kCasebookGoldens;

const char* const kCasebookGoldens = R"json(
{
  "example_pxxy": {
    "s0":              {"value": "p(z1, z2, z3 /\\ z4) \\/ q(z1 /\\ z2, z3, z4)", "origin": "worked-example"},
    "s0_text":         {"value": "p(z1, z2, z3 /\\ z4) \\/ q(z1 /\\ z2, z3, z4)", "origin": "worked-example"},
    "s1":              {"value": "p(z1, z2, z3 \\/ z4) /\\ q(z1 \\/ z2, z3, z4)", "origin": "dual"},
    "z_vars":          {"value": "z1, z2, z3, z4", "origin": "worked-example"},
    "z_pairs":         {"value": "z_1_1, z_2_1, z_3_2, z_3_3", "origin": "direct"},
    "p_pattern":       {"value": "s(x, y, z, z)", "origin": "worked-example"},
    "q_pattern":       {"value": "s(x, x, y, z)", "origin": "worked-example"},
    "common_instance": {"value": "s(x, x, y, y)", "origin": "worked-example"},
    "p_instance":      {"value": "p(x, x, y)", "origin": "worked-example"},
    "q_instance":      {"value": "q(x, y, y)", "origin": "worked-example"},
    "unifier":         {"value": "s(x, x, z, z)", "origin": "worked-example"}
  },
  "meet_nonuniqueness": {
    "z_vars":             {"value": "z_aa, z_ab, z_ba, z_bb", "origin": "direct"},
    "candidate_diagonal": {"value": "z_aa /\\ z_bb", "origin": "worked-example"},
    "candidate_cross":    {"value": "z_ab /\\ z_ba", "origin": "worked-example"},
    "s0":                 {"value": "z_aa /\\ z_ab /\\ z_ba /\\ z_bb", "origin": "oracle-validated"},
    "s1":                 {"value": "(z_aa \\/ z_ab) /\\ (z_aa \\/ z_ba) /\\ (z_ab \\/ z_bb) /\\ (z_ba \\/ z_bb)", "origin": "oracle-validated"}
  },
  "concrete_interval": {
    "z_vars":       {"value": "z_1_1, z_2_1, z_3_2, z_3_3", "origin": "direct"},
    "s0":           {"value": "(z_1_1 /\\ z_2_1 /\\ (z_3_2 \\/ (z_1_1 /\\ z_2_1)) /\\ (z_3_3 \\/ (z_1_1 /\\ z_2_1))) \\/ (z_1_1 /\\ (z_2_1 \\/ (z_3_2 /\\ z_3_3)))", "origin": "oracle-validated"},
    "s1":           {"value": "z_1_1 /\\ (z_1_1 \\/ z_2_1) /\\ (z_1_1 \\/ z_2_1 \\/ z_3_2) /\\ (z_1_1 \\/ z_2_1 \\/ z_3_3) /\\ (z_2_1 \\/ z_3_2 \\/ z_3_3)", "origin": "oracle-validated"},
    "gamma":        {"value": "z_1_1=x, z_2_1=x, z_3_2=y, z_3_3=y", "origin": "direct"},
    "p_image":      {"value": "x /\\ (x \\/ y)", "origin": "direct"},
    "q_image":      {"value": "x /\\ (x \\/ y)", "origin": "direct"}
  },
  "olsak_renaming": {
    "first_lhs_raw": {"value": "t(z_xx, z_yy, z_yy, z_yy, z_xx, z_xx)", "origin": "direct"},
    "first_rhs_raw": {"value": "t(z_xy, z_yx, z_yy, z_yx, z_xy, z_xx)", "origin": "direct"},
    "first_lhs":     {"value": "t(x, y, y, y, x, x)", "origin": "worked-example"},
    "first_rhs":     {"value": "t(z, u, y, u, z, x)", "origin": "worked-example"},
    "second_lhs":    {"value": "t(y, y, x, x, x, y)", "origin": "worked-example"},
    "second_rhs":    {"value": "t(a, b, z, c, d, u)", "origin": "worked-example"},
    "binary_lhs":    {"value": "m(z_aa, z_bb)", "origin": "worked-example"},
    "binary_rhs":    {"value": "m(z_ab, z_ba)", "origin": "worked-example"},
    "diagonal":      {"value": "f(z_aa)", "origin": "direct"}
  }
}
)json";

}  // namespace freelat::detail
