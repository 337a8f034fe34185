#include "doctest.h"

#include "akstab/expr.hpp"

using namespace akstab;

TEST_CASE("connect-sum identities on interval triples") {
  for (int k = 2; k <= 5; ++k) {
    Category cat(k, 2);
    int applicable = 0;
    for (const auto& pc : all_intervals(k))
      for (const auto& pa : all_intervals(k))
        for (const auto& pb : all_intervals(k))
          for (int ma = -1; ma <= 1; ++ma)
            for (int mb = -1; mb <= 1; ++mb) {
              auto a = ObjExpr::stable(pa.shifted(ma)), b = ObjExpr::stable(pb.shifted(mb)), c = ObjExpr::stable(pc);
              AssocCommuteReport rep;
              try {
                rep = assoc_commute_check(cat, a, b, c);
              } catch (const Error&) {
                continue;
              }
              if (rep.commute != IdentityStatus::NotApplicable) ++applicable;
              if (rep.assoc != IdentityStatus::NotApplicable) ++applicable;
              CHECK_MESSAGE(rep.commute != IdentityStatus::Fails, rep.trace[0]);
              CHECK_MESSAGE(rep.assoc != IdentityStatus::Fails, rep.trace[1]);
            }
    MESSAGE("k=" << k << " applicable identities: " << applicable);
    CHECK(applicable > 0);
  }
}
