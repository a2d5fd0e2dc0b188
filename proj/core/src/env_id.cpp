#include "tb/env_id.hpp"

#include "tb/error.hpp"

namespace tb {

std::string_view to_string(EnvId id) {
  switch (id) {
    case EnvId::kTrain: return "train";
    case EnvId::kDefaultTest: return "default_test";
    case EnvId::kOod1: return "ood1";
    case EnvId::kOod2: return "ood2";
    case EnvId::kOod3: return "ood3";
  }
  throw ValidationError("unknown env id");
}

EnvId env_id_from_string(std::string_view s) {
  if (s == "train") return EnvId::kTrain;
  if (s == "default_test") return EnvId::kDefaultTest;
  if (s == "ood1") return EnvId::kOod1;
  if (s == "ood2") return EnvId::kOod2;
  if (s == "ood3") return EnvId::kOod3;
  throw ValidationError("unknown env id: '" + std::string(s) + "'");
}

}  // namespace tb
