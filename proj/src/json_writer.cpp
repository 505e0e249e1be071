// placeholder; implementation follows
namespace hedron {}
