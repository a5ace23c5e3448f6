#include <limits>
#include <stdexcept>

#include "holobound/config.hpp"

namespace holobound {

namespace {

SpaceConfig space(std::string id, std::string domain, std::size_t n, std::string weight, std::vector<double> alphas,
                  double p, std::vector<double> radii = {}, std::vector<std::size_t> blocks = {}) {
  return {std::move(id), std::move(domain), n, std::move(weight), std::move(alphas), p, std::move(radii),
          std::move(blocks)};
}

TermConfig term(double re, double im, std::vector<int> powers, std::vector<double> exp_re = {},
                std::vector<double> exp_im = {}) {
  return {re, im, std::move(powers), std::move(exp_re), std::move(exp_im)};
}

FunctionConfig function(std::string id, std::size_t n, std::vector<TermConfig> terms) {
  return {std::move(id), n, std::move(terms)};
}

AutomorphismConfig automorphism(std::string id, std::string kind, std::vector<double> re, std::vector<double> im,
                                std::vector<double> radii = {}) {
  return {std::move(id), std::move(kind), std::move(re), std::move(im), std::move(radii)};
}

CheckConfig check(std::string kind, std::string space_id) {
  CheckConfig c;
  c.check = std::move(kind);
  c.space = std::move(space_id);
  return c;
}

CheckConfig at_point(CheckConfig c, std::vector<double> re, std::vector<double> im = {}) {
  c.point_re = std::move(re);
  c.point_im = std::move(im);
  return c;
}

CheckConfig with_function(CheckConfig c, std::string f) {
  c.function = std::move(f);
  return c;
}

CheckConfig with_automorphism(CheckConfig c, std::string a) {
  c.automorphism = std::move(a);
  return c;
}

RunConfig base(std::string description) {
  RunConfig c;
  c.description = std::move(description);
  c.seed = 20240611;
  c.output.format = "csv";
  c.integration.samples = 100000;
  c.integration.tol = 1e-8;
  return c;
}

RunConfig fock_theorem_f() {
  RunConfig c = base("Fock spaces on C and C^2: pointwise and sup bounds, extremal sharpness, dual norm at 0");
  c.spaces = {space("f1", "fock", 1, "fock", {1.0}, 2.0), space("f1p1", "fock", 1, "fock", {2.0}, 1.0),
              space("f2", "fock", 2, "fock", {0.5}, 4.0)};
  c.functions = {
      function("one", 1, {term(1, 0, {0})}),
      function("zeta", 1, {term(1, 0, {1})}),
      function("poly", 1, {term(1, 0, {0}), term(0.5, 0, {1}), term(0, -0.25, {2})}),
      function("expmix", 1, {term(1, 0, {1}, {0.4}), term(0.3, 0, {0})}),
      function("mix2", 2, {term(1, 0, {1, 1}), term(1, 0, {0, 0}, {0.2, 0.0}, {0.0, -0.1})}),
  };
  c.checks = {
      at_point(with_function(check("bound", "f1"), "one"), {0.0}),
      at_point(with_function(check("bound", "f1"), "zeta"), {0.7}, {0.2}),
      at_point(with_function(check("bound", "f1"), "poly"), {1.5}, {-0.5}),
      at_point(with_function(check("bound", "f1p1"), "expmix"), {-1.0}, {1.0}),
      at_point(with_function(check("bound", "f2"), "mix2"), {0.5, -1.0}, {0.5, 0.0}),
      at_point(check("sharpness", "f1"), {0.0}),
      at_point(check("sharpness", "f1"), {1.0}),
      at_point(check("sharpness", "f1"), {1.0}, {1.0}),
      at_point(check("sharpness", "f2"), {1.0, 0.0}, {0.0, 1.0}),
      with_function(check("sup-bound", "f1"), "zeta"),
      with_function(check("sup-bound", "f1"), "one"),
  };
  CheckConfig d = check("delta0", "f1");
  d.functions = {"one", "zeta", "poly"};
  d.random = 10;
  c.checks.push_back(d);
  return c;
}

RunConfig fock_aniso() {
  RunConfig c = base("Fock spaces with per-coordinate and per-block Gaussian weights");
  c.spaces = {space("a2", "fock", 2, "fock_aniso", {0.5, 2.0}, 2.0),
              space("b3", "fock", 3, "fock_aniso", {1.0, 0.5}, 2.0, {}, {2, 1})};
  c.automorphisms = {automorphism("t2", "translation", {0.5, 0.0}, {0.0, -0.3}),
                     automorphism("t3", "translation", {0.2, 0.0, -0.4}, {0.1, 0.3, 0.0})};
  c.functions = {
      function("g2", 2, {term(1, 0, {0, 0}), term(1, 0, {1, 1})}),
      function("e2", 2, {term(1, 0, {0, 0}, {0.3, 0.0}, {0.0, 0.2})}),
      function("g3", 3, {term(1, 0, {1, 0, 0}), term(0, 1, {0, 0, 2})}),
  };
  c.checks = {
      at_point(with_function(check("bound", "a2"), "g2"), {1.0, 0.0}, {0.0, 0.5}),
      at_point(check("sharpness", "a2"), {0.5, 0.0}, {0.0, -0.5}),
      at_point(with_function(check("bound", "b3"), "g3"), {0.3, -0.2, 0.5}, {0.1, 0.0, 0.4}),
      at_point(check("sharpness", "b3"), {0.4, 0.0, 0.3}, {0.0, 0.2, 0.0}),
      with_automorphism(check("invariance", "a2"), "t2"),
      with_function(with_automorphism(check("scheme", "a2"), "t2"), "e2"),
      with_function(with_automorphism(check("scheme", "b3"), "t3"), "g3"),
  };
  CheckConfig ph = with_automorphism(check("pluriharmonicity", "a2"), "t2");
  ph.random = 3;
  c.checks.push_back(ph);
  ph = with_automorphism(check("pluriharmonicity", "b3"), "t3");
  ph.random = 3;
  c.checks.push_back(ph);
  return c;
}

RunConfig ball_bergman() {
  RunConfig c = base("Weighted Bergman spaces on the unit disc and the unit ball of C^2");
  c.parameter_ranges = {{"alpha", "(-1,inf)"}, {"p", "(0,inf)"}};
  c.spaces = {space("d1", "ball", 1, "ball", {0.0}, 2.0), space("d1p1", "ball", 1, "ball", {-0.5}, 1.0),
              space("b2", "ball", 2, "ball", {1.0}, 2.0)};
  c.automorphisms = {automorphism("m1", "ball", {0.5}, {0.0}), automorphism("m2", "ball", {0.3, 0.0}, {0.0, 0.2})};
  c.functions = {
      function("one", 1, {term(1, 0, {0})}),
      function("zeta", 1, {term(1, 0, {1})}),
      function("poly", 1, {term(1, 0, {0}), term(2, 0, {1}), term(-1, 0, {2})}),
      function("z12", 2, {term(1, 0, {1, 1}), term(1, 0, {0, 0})}),
  };
  c.checks = {
      at_point(with_function(check("bound", "d1"), "one"), {0.5}),
      at_point(with_function(check("bound", "d1"), "poly"), {0.3}, {0.4}),
      at_point(with_function(check("bound", "d1p1"), "poly"), {-0.6}),
      at_point(with_function(check("bound", "b2"), "z12"), {0.2, 0.4}, {0.1, 0.0}),
      at_point(check("sharpness", "d1"), {0.6}),
      at_point(check("sharpness", "b2"), {0.3, 0.0}, {0.0, 0.2}),
      with_function(check("sup-bound", "d1"), "zeta"),
      with_automorphism(check("invariance", "d1"), "m1"),
      with_automorphism(check("invariance", "b2"), "m2"),
      with_function(with_automorphism(check("scheme", "d1"), "m1"), "poly"),
  };
  for (const char* pair : {"d1", "b2"}) {
    CheckConfig ph = with_automorphism(check("pluriharmonicity", pair), pair == std::string("d1") ? "m1" : "m2");
    ph.random = 3;
    c.checks.push_back(ph);
  }
  CheckConfig d = check("delta0", "d1");
  d.random = 10;
  c.checks.push_back(d);
  return c;
}

RunConfig polydisc_bergman() {
  RunConfig c = base("Weighted Bergman spaces on polydiscs, including per-coordinate radii and a C factor");
  c.parameter_ranges = {{"alpha_j", "(-1,inf) on disc factors, (0,inf) on C factors"}, {"p", "(0,inf)"}};
  c.spaces = {space("u2", "polydisc", 2, "polydisc", {0.0, 1.0}, 2.0, {1.0, 1.0}),
              space("r2", "polydisc", 2, "polydisc", {0.5, 1.0}, 2.0, {2.0, std::numeric_limits<double>::infinity()})};
  c.automorphisms = {automorphism("pm", "polydisc", {0.3, 0.0}, {0.0, -0.2}),
                     automorphism("pr", "polydisc", {0.8, 0.5}, {0.0, 0.0}, {2.0, std::numeric_limits<double>::infinity()})};
  c.functions = {
      function("h2", 2, {term(1, 0, {0, 0}), term(1, 0, {1, 0}), term(1, 0, {0, 2})}),
      function("k2", 2, {term(1, 0, {1, 1}, {0.0, 0.2})}),
  };
  c.checks = {
      at_point(with_function(check("bound", "u2"), "h2"), {0.5, -0.3}, {0.2, 0.4}),
      at_point(with_function(check("bound", "r2"), "h2"), {1.2, 0.8}, {0.0, -0.5}),
      at_point(check("sharpness", "u2"), {0.3, 0.0}, {0.0, -0.2}),
      at_point(check("sharpness", "r2"), {1.0, 0.5}, {0.5, 0.0}),
      with_function(check("sup-bound", "u2"), "k2"),
      with_automorphism(check("invariance", "u2"), "pm"),
      with_automorphism(check("invariance", "r2"), "pr"),
      with_function(with_automorphism(check("scheme", "u2"), "pm"), "h2"),
      with_function(with_automorphism(check("scheme", "r2"), "pr"), "k2"),
  };
  CheckConfig ph = with_automorphism(check("pluriharmonicity", "u2"), "pm");
  ph.random = 3;
  c.checks.push_back(ph);
  ph = with_automorphism(check("pluriharmonicity", "r2"), "pr");
  ph.random = 3;
  c.checks.push_back(ph);
  return c;
}

RunConfig scheme_generic() {
  RunConfig c = base("Transport identities and the abstract bound on all three geometries");
  c.spaces = {space("f1", "fock", 1, "fock", {1.0}, 2.0), space("f1p1", "fock", 1, "fock", {1.0}, 1.0),
              space("d1", "ball", 1, "ball", {0.0}, 2.0), space("b2", "ball", 2, "ball", {0.5}, 2.0),
              space("u2", "polydisc", 2, "polydisc", {0.0, 0.5}, 2.0)};
  c.automorphisms = {automorphism("t1", "translation", {0.7}, {-0.4}), automorphism("m1", "ball", {-0.4}, {0.3}),
                     automorphism("m2", "ball", {0.2, -0.1}, {0.1, 0.3}),
                     automorphism("pm", "polydisc", {0.4, -0.3}, {0.1, 0.2})};
  c.functions = {
      function("onepz", 1, {term(1, 0, {0}), term(1, 0, {1})}),
      function("c1", 1, {term(2.5, -1, {0})}),
      function("q2", 2, {term(1, 0, {1, 0}), term(0.5, 0.5, {0, 2}), term(1, 0, {0, 0})}),
  };
  c.checks = {
      with_function(with_automorphism(check("scheme", "f1"), "t1"), "onepz"),
      with_function(with_automorphism(check("scheme", "f1p1"), "t1"), "onepz"),
      with_function(with_automorphism(check("scheme", "d1"), "m1"), "c1"),
      with_function(with_automorphism(check("scheme", "d1"), "m1"), "onepz"),
      with_function(with_automorphism(check("scheme", "b2"), "m2"), "q2"),
      with_function(with_automorphism(check("scheme", "u2"), "pm"), "q2"),
  };
  return c;
}

RunConfig integrated_remark() {
  RunConfig c = base("Integrated bounds with increasing outer functions over sub-balls");
  c.spaces = {space("f1", "fock", 1, "fock", {1.0}, 2.0), space("d1", "ball", 1, "ball", {1.0}, 2.0),
              space("u2", "polydisc", 2, "polydisc", {0.0, 0.0}, 2.0)};
  c.functions = {
      function("one", 1, {term(1, 0, {0})}),
      // exp(alpha zeta conj(z0)) with alpha = 1, z0 = 1 - 0.5i
      function("ext", 1, {term(1, 0, {0}, {1.0}, {0.5})}),
      function("poly", 1, {term(1, 0, {0}), term(-0.5, 0.25, {1}), term(0.3, 0, {3})}),
      function("h2", 2, {term(1, 0, {0, 0}), term(1, 0, {1, 1})}),
  };
  auto integrated = [](std::string sp, std::string f, std::string outer, std::vector<double> re,
                       std::vector<double> im, double radius) {
    CheckConfig k = at_point(with_function(check("integrated", std::move(sp)), std::move(f)), std::move(re),
                             std::move(im));
    k.outer = std::move(outer);
    k.radius = radius;
    return k;
  };
  c.checks = {
      integrated("f1", "one", "identity", {0.0}, {0.0}, 1.0),
      integrated("f1", "ext", "square", {1.0}, {-0.5}, 0.5),
      integrated("f1", "ext", "square", {1.0}, {-0.5}, 0.1),
      integrated("f1", "poly", "log1p", {-0.5}, {1.0}, 0.75),
      integrated("d1", "poly", "identity", {0.2}, {0.1}, 0.5),
      integrated("d1", "poly", "square", {-0.3}, {0.3}, 0.4),
      integrated("d1", "one", "log1p", {0.0}, {0.0}, 0.9),
      integrated("u2", "h2", "square", {0.1, -0.2}, {0.0, 0.3}, 0.5),
  };
  return c;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fock-theorem-f", "fock-aniso", "ball-bergman", "polydisc-bergman", "scheme-generic", "integrated-remark"};
}

RunConfig preset(const std::string& name) {
  if (name == "fock-theorem-f") return fock_theorem_f();
  if (name == "fock-aniso") return fock_aniso();
  if (name == "ball-bergman") return ball_bergman();
  if (name == "polydisc-bergman") return polydisc_bergman();
  if (name == "scheme-generic") return scheme_generic();
  if (name == "integrated-remark") return integrated_remark();
  throw std::invalid_argument("unknown preset '" + name + "'");
}

std::string preset_summary(const std::string& name) { return preset(name).description; }

}  // namespace holobound
