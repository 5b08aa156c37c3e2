#include "ringlab/corpus.hpp"

namespace ringlab {

std::vector<Ring> finite_corpus() {
  std::vector<Ring> out;
  for (std::uint64_t n = 2; n <= 64; ++n) out.push_back(Ring::zmod(n));
  for (const char* s : {"Quot(Zn(2),[1,1,1])", "Quot(Zn(2),[1,1,0,1])", "Quot(Zn(3),[1,0,1])", "LocalNonChain2",
                        "Prod(Zn(4),Zn(3))", "Prod(Zn(2),Zn(2))"})
    out.push_back(parse_ring_spec(s));
  return out;
}

std::vector<Ring> builtin_corpus() {
  std::vector<Ring> out = finite_corpus();
  out.push_back(Ring::integers());
  out.push_back(Ring::eventually_constant(2));
  return out;
}

}  // namespace ringlab
