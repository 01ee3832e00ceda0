#include <stdexcept>

#include "revcat/models.hpp"

namespace revcat::cat {

CategoryPtr modelByName(const std::string& name) {
  if (name == "finpinj") return finPInj();
  if (name == "pids") {
    static CategoryPtr instance = pIdS({"a", "b", "c"});
    return instance;
  }
  if (name == "pids-oplus") {
    static CategoryPtr instance = pIdSOplus({"a", "b"});
    return instance;
  }
  if (name == "subpid") return subPIdSOplus();
  if (name == "example56") return example56();
  if (name == "example513") return example513();
  throw std::invalid_argument("unknown model: " + name);
}

std::vector<std::string> modelNames() {
  return {"finpinj", "pids", "pids-oplus", "subpid", "example56", "example513"};
}

}  // namespace revcat::cat
