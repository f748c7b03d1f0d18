#ifndef LIFTEDMC_ERRORS_HPP
#define LIFTEDMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liftedmc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define LIFTEDMC_DEFINE_ERROR(name)                  \
    struct name : Error {                            \
        using Error::Error;                          \
    }

LIFTEDMC_DEFINE_ERROR(NonPositiveWeightError);
LIFTEDMC_DEFINE_ERROR(NotUnimodalError);
LIFTEDMC_DEFINE_ERROR(UnknownFamilyError);
LIFTEDMC_DEFINE_ERROR(InvalidParamError);
LIFTEDMC_DEFINE_ERROR(EvenNError);
LIFTEDMC_DEFINE_ERROR(ThetaOutOfRangeError);
LIFTEDMC_DEFINE_ERROR(DimensionMismatchError);
LIFTEDMC_DEFINE_ERROR(CapExceededError);
LIFTEDMC_DEFINE_ERROR(VacuousMinorizationError);
LIFTEDMC_DEFINE_ERROR(ZeroMassError);
LIFTEDMC_DEFINE_ERROR(BudgetExceededError);
LIFTEDMC_DEFINE_ERROR(EmptyConditioningEventError);
LIFTEDMC_DEFINE_ERROR(SingularSystemError);
LIFTEDMC_DEFINE_ERROR(TildeCTooSmallError);
LIFTEDMC_DEFINE_ERROR(InvalidCombinatoricsError);
LIFTEDMC_DEFINE_ERROR(RhoOutOfRangeError);
LIFTEDMC_DEFINE_ERROR(DegenerateFitError);

#undef LIFTEDMC_DEFINE_ERROR

} // namespace liftedmc

#endif // LIFTEDMC_ERRORS_HPP
