#pragma once

#include <stdexcept>
#include <string>

namespace planevar {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PLANEVAR_ERROR_TYPE(Name)  \
    class Name : public Error {    \
    public:                        \
        using Error::Error;        \
    };

PLANEVAR_ERROR_TYPE(ValidationError)
PLANEVAR_ERROR_TYPE(SingularMap)
PLANEVAR_ERROR_TYPE(InvalidPerturbation)
PLANEVAR_ERROR_TYPE(IndexOutOfRange)
PLANEVAR_ERROR_TYPE(PointNotInDomain)
PLANEVAR_ERROR_TYPE(DegenerateCycle)
PLANEVAR_ERROR_TYPE(NotCollinear)
PLANEVAR_ERROR_TYPE(CollinearPoints)
PLANEVAR_ERROR_TYPE(NotConvexPosition)
PLANEVAR_ERROR_TYPE(ProjectionMismatch)
PLANEVAR_ERROR_TYPE(NotJoinedConvexly)
PLANEVAR_ERROR_TYPE(DomainMismatch)
PLANEVAR_ERROR_TYPE(NonRealInput)
PLANEVAR_ERROR_TYPE(SizeMismatch)
PLANEVAR_ERROR_TYPE(AmbiguousGeometry)
PLANEVAR_ERROR_TYPE(UnknownFormat)

#undef PLANEVAR_ERROR_TYPE

}  // namespace planevar
