#pragma once

#include <string>

#include <json.hpp>

#include "vres/complex.hpp"
#include "vres/homology.hpp"
#include "vres/pipeline.hpp"
#include "vres/resolution.hpp"

namespace vres {

using json = nlohmann::json;

// Twists are written in the S(a) convention: a generator of degree d has twist -d.
json twistToJson(const Deg& d);
Deg twistFromJson(const json& j);

json setupToJson(const Setup& s);
Setup setupFromJson(const json& j);

json complexToJson(const ColoredComplex& d);
ColoredComplex complexFromJson(const json& j);
json facesToJson(const Setup& s, const std::vector<Face>& faces);

json matrixToJson(const Ring& R, const GradedMatrix& a);
GradedMatrix matrixFromJson(const Ring& R, const json& j);

json chainToJson(const Ring& R, const ChainComplex& c);
ChainComplex chainFromJson(const Ring& R, const json& j);

// {"ideal": [...]} or {"module": {"gens": [...], "relations": matrix}}
Presentation presentationFromJson(const Ring& R, const json& j);
json presentationToJson(const Ring& R, const Presentation& m);

json bettiToJson(const BettiTable& t);
json homologyToJson(const HomologyProfile& h);
json ranksToJson(const ChainComplex& c);
json virtualCheckToJson(const VirtualCheck& v);
json coneToJson(const Ring& R, const ConeResult& c);
json classificationToJson(const Ring& R, const Classification& c);
json pipelineToJson(const Ring& R, const PipelineReport& r);

// Sorted keys, two-space indent, trailing newline.
std::string canonical(const json& j);

}  // namespace vres
