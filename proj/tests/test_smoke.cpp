#include <doctest.h>

#include "lpc/build.hpp"
#include "lpc/check.hpp"
#include "lpc/cutelim.hpp"
#include "lpc/derivation.hpp"
#include "lpc/dual_axioms.hpp"
#include "lpc/elaborate.hpp"
#include "lpc/errors.hpp"
#include "lpc/models/boolalg.hpp"
#include "lpc/models/finvect.hpp"
#include "lpc/models/rel.hpp"
#include "lpc/replicate.hpp"
#include "lpc/search.hpp"
#include "lpc/semantics/interp.hpp"
#include "lpc/semantics/laws.hpp"
#include "lpc/sequent.hpp"
#include "lpc/sexpr.hpp"
#include "lpc/syntax.hpp"

using namespace lpc;

TEST_CASE("everything links and an axiom checks") {
    auto d = build::ax(top());
    CHECK(check_ok(d));
    models::RelModel rel;
    auto den = semantics::interp_linear(rel, d);
    CHECK(rel.l_eq(den.mor, rel.l_id(rel.l_zero())));
}
