#include <cstddef>

// Built-in word lists for the naming standards. Deliberately biased toward
// the vocabulary of Java method names; override with --verbs/--dictionary/
// --abbreviations files when a project needs a different lexicon.

namespace mnw {

extern const char* const kBuiltinVerbs[] = {
    "accept", "access", "acquire", "activate", "add", "adjust", "advance",
    "aggregate", "allocate", "allow", "analyze", "append", "apply", "archive",
    "are", "assemble", "assert", "assign", "attach", "authenticate",
    "authorize", "await", "backup", "begin", "bind", "block", "broadcast",
    "build", "cache", "calculate", "call", "can", "cancel", "capture", "cast",
    "change", "check", "claim", "clean", "cleanup", "clear", "clone", "close",
    "collect", "combine", "commit", "compare", "compile", "complete",
    "compose", "compute", "concat", "configure", "confirm", "connect",
    "construct", "consume", "contains", "convert", "copy", "count", "create",
    "deactivate", "debug", "declare", "decode", "decompress", "decorate",
    "decrement", "decrypt", "define", "delegate", "delete", "deliver",
    "deregister", "derive", "describe", "deserialize", "destroy", "detach",
    "detect", "determine", "disable", "discard", "disconnect", "dispatch",
    "display", "dispose", "divide", "do", "does", "download", "drain", "draw",
    "drop", "dump", "duplicate", "emit", "enable", "encode", "encrypt", "end",
    "enqueue", "ensure", "enter", "enumerate", "equals", "escape", "evaluate",
    "evict", "execute", "exists", "exit", "expand", "expect", "expire",
    "export", "extend", "extract", "fail", "fetch", "fill", "filter",
    "finalize", "find", "finish", "fire", "fix", "flatten", "flush", "fold",
    "force", "format", "forward", "free", "generate", "get", "grant", "group",
    "grow", "handle", "has", "hash", "have", "hide", "hold", "ignore",
    "import", "increment", "index", "init", "initialize", "inject", "insert",
    "inspect", "install", "instantiate", "interpolate", "interrupt",
    "intersect", "invalidate", "invert", "invoke", "is", "iterate", "join",
    "keep", "kill", "launch", "limit", "link", "list", "listen", "load",
    "lock", "log", "lookup", "loop", "make", "map", "mark", "match", "may",
    "maximize", "measure", "merge", "migrate", "minimize", "mock", "modify",
    "monitor", "move", "multiply", "must", "normalize", "notify", "observe",
    "obtain", "offer", "open", "optimize", "order", "pack", "pad", "parse",
    "partition", "pause", "peek", "perform", "persist", "ping", "play",
    "poll", "pop", "populate", "post", "prepare", "prepend", "print",
    "process", "produce", "promote", "propagate", "provide", "publish",
    "pull", "purge", "push", "put", "query", "queue", "quote", "raise",
    "read", "rebuild", "receive", "recompute", "record", "recover",
    "redirect", "reduce", "refresh", "register", "reject", "release",
    "reload", "remove", "rename", "render", "repair", "repeat", "replace",
    "reply", "report", "request", "require", "reset", "resize", "resolve",
    "restart", "restore", "resume", "retain", "retrieve", "retry", "return",
    "reverse", "revert", "revoke", "rewrite", "rotate", "round", "run",
    "sample", "sanitize", "save", "scale", "scan", "schedule", "search",
    "seek", "select", "send", "serialize", "serve", "set", "shall", "should",
    "show", "shrink", "shut", "shutdown", "sign", "signal", "simulate",
    "skip", "sleep", "sort", "spawn", "split", "start", "stop", "store",
    "stream", "strip", "submit", "subscribe", "subtract", "sum", "supply",
    "support", "suspend", "swap", "switch", "sync", "synchronize", "take",
    "teardown", "terminate", "test", "throw", "toggle", "touch", "trace",
    "track", "transform", "translate", "traverse", "trim", "truncate", "try",
    "unbind", "unlock", "unpack", "unregister", "unsubscribe", "unwrap",
    "update", "upload", "validate", "verify", "visit", "wait", "wake", "walk",
    "warm", "warn", "was", "watch", "were", "will", "would", "wrap", "write",
    "yield",
};
extern const size_t kBuiltinVerbCount = sizeof(kBuiltinVerbs) / sizeof(kBuiltinVerbs[0]);

extern const char* const kBuiltinDictionary[] = {
    "able", "about", "above", "absolute", "abstract", "access", "account",
    "accounts", "action", "actions", "active", "activity", "actor", "actual",
    "adapter", "address", "addresses", "admin", "after", "again", "against",
    "agent", "agents", "alias", "aliases", "alignment", "all", "alpha",
    "also", "amount", "amounts", "analysis", "ancestor", "ancestors",
    "anchor", "angle", "angles", "animation", "annotation", "annotations",
    "anonymous", "answer", "answers", "any", "api", "app", "application",
    "applications", "archive", "archives", "area", "areas", "argument",
    "arguments", "arity", "around", "array", "arrays", "arrow", "article",
    "articles", "artifact", "artifacts", "ascending", "ascii", "aspect",
    "asset", "assets", "assignment", "assignments", "association", "async",
    "atom", "atomic", "attachment", "attachments", "attempt", "attempts",
    "attribute", "attributes", "audio", "audit", "author", "authors", "auto",
    "automatic", "availability", "available", "average", "axis", "back",
    "backend", "background", "backward", "badge", "balance", "band", "bank",
    "banner", "bar", "bars", "base", "baseline", "bases", "basic", "basis",
    "batch", "batches", "bean", "beans", "bearer", "before", "begin",
    "beginning", "behavior", "being", "belief", "below", "benchmark", "best",
    "beta", "between", "big", "billing", "bin", "binary", "binding",
    "bindings", "bit", "bits", "black", "blank", "blob", "blobs", "block",
    "blocks", "blue", "board", "body", "bodies", "bold", "bookmark", "bool",
    "boolean", "booleans", "boot", "border", "borders", "both", "bottom",
    "bound", "boundary", "bounds", "box", "boxes", "branch", "branches",
    "brand", "bridge", "broker", "browser", "bucket", "buckets", "buddy",
    "budget", "buffer", "buffers", "bug", "builder", "builders", "building",
    "bulk", "bundle", "bundles", "bus", "business", "busy", "button",
    "buttons", "byte", "bytes", "cache", "caches", "calendar", "callback",
    "callbacks", "caller", "camera", "canonical", "canvas", "capability",
    "capacity", "caption", "card", "cards", "caret", "carrier", "case",
    "cases", "catalog", "category", "categories", "cause", "causes", "cell",
    "cells", "center", "central", "certificate", "certificates", "chain",
    "chains", "challenge", "change", "changes", "channel", "channels",
    "chapter", "char", "character", "characters", "charge", "chars", "chart",
    "charts", "chat", "checker", "checkpoint", "checksum", "child",
    "children", "choice", "choices", "chunk", "chunks", "cipher", "circle",
    "city", "claim", "claims", "class", "classes", "classifier", "clause",
    "clauses", "client", "clients", "clip", "clipboard", "clock", "clone",
    "cluster", "clusters", "code", "codec", "codes", "collation",
    "collection", "collections", "collector", "collision", "color", "colors",
    "column", "columns", "combination", "command", "commands", "comment",
    "comments", "commit", "commits", "common", "community", "company",
    "comparator", "comparison", "compatibility", "compatible", "compiler",
    "complete", "completion", "complex", "component", "components",
    "composite", "compression", "concrete", "concurrency", "concurrent",
    "condition", "conditions", "conference", "confidence", "config",
    "configuration", "configurations", "conflict", "conflicts", "connection",
    "connections", "connector", "console", "constant", "constants",
    "constraint", "constraints", "constructor", "constructors", "consumer",
    "consumers", "contact", "contacts", "container", "containers", "content",
    "contents", "context", "contexts", "contract", "contracts", "control",
    "controller", "controllers", "controls", "convention", "conversation",
    "conversion", "converter", "cookie", "cookies", "coordinate",
    "coordinates", "coordinator", "copy", "copies", "core", "corner", "corpus",
    "correct", "correction", "cost", "costs", "counter", "counters",
    "country", "course", "cover", "coverage", "create", "creation",
    "credential", "credentials", "credit", "criteria", "criterion",
    "critical", "cross", "crypto", "culture", "currency", "current", "cursor",
    "curve", "custom", "customer", "customers", "cycle", "cycles", "daemon",
    "daily", "dashboard", "data", "database", "databases", "dataset",
    "datasets", "date", "dates", "datum", "day", "days", "dead", "deadline",
    "debit", "debug", "decimal", "decision", "declaration", "declarations",
    "decoder", "deep", "default", "defaults", "definition", "definitions",
    "degree", "degrees", "delay", "delegate", "delimiter", "delivery",
    "delta", "demand", "demo", "density", "dependency", "dependencies",
    "deployment", "depth", "descending", "description", "descriptions",
    "descriptor", "descriptors", "design", "desktop", "destination", "detail",
    "details", "device", "devices", "diagnostic", "diagnostics", "diagram",
    "dialect", "dialog", "dictionary", "difference", "differences", "digest",
    "digit", "digital", "digits", "dimension", "dimensions", "direct",
    "direction", "directions", "directive", "directory", "directories",
    "dirty", "disabled", "discount", "discovery", "disk", "dispatcher",
    "display", "distance", "distances", "distribution", "district", "divider",
    "division", "document", "documents", "domain", "domains", "double",
    "down", "draft", "drain", "driver", "drivers", "due", "dump", "duplicate",
    "duplicates", "duration", "dynamic", "each", "early", "east", "edge",
    "edges", "edit", "editor", "editors", "effect", "effects", "effective",
    "element", "elements", "email", "emails", "embedded", "emitter", "empty",
    "enabled", "encoder", "encoding", "encodings", "endpoint", "endpoints",
    "engine", "engines", "entity", "entities", "entry", "entries", "enum",
    "envelope", "environment", "environments", "epoch", "equal", "equality",
    "equation", "error", "errors", "escape", "estimate", "estimates", "etag",
    "event", "events", "every", "evidence", "exact", "example", "examples",
    "exception", "exceptions", "exchange", "exclusive", "executable",
    "execution", "executor", "existing", "exit", "expansion", "expected",
    "expiration", "expiry", "explicit", "exponent", "export", "exports",
    "expression", "expressions", "extension", "extensions", "extent",
    "external", "extra", "extras", "face", "facet", "facility", "factor",
    "factors", "factory", "factories", "failure", "failures", "fallback",
    "false", "family", "fast", "fault", "faults", "feature", "features",
    "feed", "feedback", "feeds", "fence", "fetch", "field", "fields", "file",
    "files", "filesystem", "fill", "filter", "filters", "final", "finder",
    "fine", "fingerprint", "finite", "first", "fixed", "fixture", "fixtures",
    "flag", "flags", "flat", "flavor", "flight", "float", "floats", "floor",
    "flow", "flows", "focus", "folder", "folders", "follower", "followers",
    "font", "fonts", "footer", "force", "foreground", "foreign", "forest",
    "fork", "form", "formal", "formats", "formatter", "forms", "formula",
    "forward", "found", "fraction", "fragment", "fragments", "frame",
    "frames", "framework", "free", "frequency", "fresh", "friend", "friends",
    "front", "full", "function", "functions", "future", "futures", "game",
    "games", "gamma", "gap", "gaps", "garbage", "gateway", "gauge", "general",
    "generation", "generator", "generators", "generic", "genre", "geometry",
    "gesture", "global", "glyph", "goal", "goals", "good", "grade",
    "gradient", "grammar", "grant", "grants", "granularity", "graph",
    "graphics", "graphs", "gravity", "gray", "green", "grid", "group",
    "groups", "guard", "guess", "guest", "guide", "handle", "handler",
    "handlers", "handles", "handshake", "hard", "hardware", "head", "header",
    "headers", "heading", "health", "heap", "heartbeat", "heavy", "height",
    "heights", "help", "helper", "helpers", "hidden", "hierarchy", "high",
    "highlight", "hint", "hints", "histogram", "history", "hit", "hits",
    "holder", "holders", "hole", "home", "hook", "hooks", "horizontal",
    "host", "hostname", "hosts", "hour", "hours", "house", "hover", "hub",
    "human", "icon", "icons", "identical", "identification", "identifier",
    "identifiers", "identity", "idle", "image", "images", "immediate",
    "immutable", "implementation", "implementations", "implicit", "import",
    "imports", "inbound", "inbox", "inclusive", "income", "incoming",
    "increment", "indent", "indentation", "indexes", "indices", "indicator",
    "indicators", "individual", "infinite", "infinity", "influence",
    "initial", "initializer", "inline", "inner", "input", "inputs",
    "insensitive", "insert", "insertion", "inset", "inside", "inspection",
    "inspector", "instance", "instances", "instant", "instruction",
    "instructions", "instrument", "integer", "integers", "integration",
    "integrity", "intent", "interaction", "interceptor", "interest",
    "interface", "interfaces", "intermediate", "internal", "interpreter",
    "interrupt", "intersection", "interval", "intervals", "invalid",
    "inventory", "inverse", "invitation", "invocation", "invoice", "invoker",
    "island", "isolation", "issue", "issuer", "issues", "italic", "item",
    "items", "iteration", "iterator", "iterators", "job", "jobs", "joint",
    "journal", "journey", "judge", "junction", "kernel", "key", "keyboard",
    "keys", "keyword", "keywords", "kind", "kinds", "knowledge", "known",
    "label", "labels", "lambda", "landscape", "language", "languages",
    "large", "last", "latch", "late", "latency", "latest", "latitude",
    "lattice", "layer", "layers", "layout", "layouts", "lazy", "leader",
    "leaf", "league", "leak", "lease", "least", "leaves", "ledger", "left",
    "legacy", "legend", "length", "lengths", "lesson", "letter", "letters",
    "level", "levels", "lexer", "lexicon", "library", "libraries", "license",
    "life", "lifecycle", "lifetime", "light", "like", "limit", "limits",
    "line", "linear", "lines", "linker", "listener", "listeners", "lists",
    "literal", "literals", "little", "live", "loader", "loaders", "local",
    "locale", "locales", "location", "locations", "locator", "logger",
    "logging", "logic", "logical", "login", "logout", "long", "longitude",
    "loop", "loops", "loss", "lost", "lower", "lowest", "machine", "machines",
    "macro", "magic", "magnitude", "mail", "mailbox", "main", "major",
    "manager", "managers", "mandatory", "manifest", "manual", "many",
    "margin", "margins", "mark", "marker", "markers", "market", "markup",
    "mask", "masks", "master", "matcher", "matches", "matching", "material",
    "matrix", "matter", "maximum", "mean", "meaning", "measure",
    "measurement", "media", "median", "medium", "member", "members",
    "membership", "memo", "memory", "menu", "menus", "mesh", "message",
    "messages", "messenger", "meta", "metadata", "meter", "method",
    "methods", "metric", "metrics", "middle", "migration", "millis",
    "minimum", "minor", "minute", "minutes", "mirror", "missing", "mission",
    "mix", "mixed", "mobile", "modal", "mode", "model", "models", "modes",
    "modification", "modifier", "modifiers", "module", "modules", "moment",
    "money", "monitor", "month", "months", "more", "most", "motion", "mount",
    "mouse", "movement", "movie", "multi", "multiple", "multiplier", "music",
    "mutable", "mutation", "mutex", "mutual", "name", "names", "namespace",
    "namespaces", "narrow", "native", "natural", "navigation", "nearest",
    "negative", "neighbor", "neighbors", "nested", "network", "networks",
    "neutral", "new", "next", "nice", "nil", "node", "nodes", "noise",
    "nonce", "none", "normal", "north", "not", "notation", "note", "notes",
    "notice", "notification", "notifications", "now", "null", "nullable",
    "number", "numbers", "numeric", "object", "objects", "observer",
    "observers", "occurrence", "occurrences", "offer", "offers", "office",
    "official", "offline", "offset", "offsets", "old", "online", "only",
    "opacity", "opaque", "open", "opening", "operand", "operands",
    "operation", "operations", "operator", "operators", "optimization",
    "option", "optional", "options", "oracle", "orange", "order", "ordering",
    "orders", "ordinal", "organization", "orientation", "origin", "original",
    "other", "outbound", "outcome", "outer", "outgoing", "outline", "output",
    "outputs", "outside", "overall", "overflow", "overlap", "overlay",
    "override", "overrides", "owner", "owners", "ownership", "pack",
    "package", "packages", "packet", "packets", "padding", "page", "pages",
    "pair", "pairs", "palette", "pane", "panel", "panels", "paper",
    "paragraph", "parallel", "parameter", "parameters", "parent", "parents",
    "parser", "parsers", "part", "partial", "participant", "participants",
    "particle", "partition", "partitions", "partner", "parts", "party",
    "pass", "passenger", "passive", "password", "passwords", "past", "patch",
    "path", "paths", "pattern", "patterns", "pause", "payload", "payloads",
    "payment", "payments", "peak", "peer", "peers", "penalty", "pending",
    "people", "percent", "percentage", "performance", "period", "periods",
    "permission", "permissions", "persistence", "person", "persons", "phase",
    "phases", "phone", "photo", "photos", "phrase", "physical", "picture",
    "pictures", "piece", "pieces", "pipe", "pipeline", "pipelines", "pivot",
    "pixel", "pixels", "place", "placeholder", "places", "plain", "plan",
    "plane", "planner", "plans", "plant", "plate", "platform", "platforms",
    "player", "players", "playlist", "plot", "plugin", "plugins", "point",
    "pointer", "pointers", "points", "policy", "policies", "poll", "pool",
    "pools", "population", "port", "portal", "portion", "portrait", "ports",
    "position", "positions", "positive", "post", "posts", "power",
    "practice", "precision", "predicate", "predicates", "prediction",
    "preference", "preferences", "prefix", "prefixes", "presence", "present",
    "presentation", "preset", "press", "pressure", "preview", "previous",
    "price", "prices", "primary", "prime", "primitive", "principal", "print",
    "printer", "priority", "priorities", "privacy", "private", "privilege",
    "privileges", "probability", "probe", "problem", "problems", "procedure",
    "procedures", "processor", "processors", "producer", "producers",
    "product", "production", "products", "profile", "profiles", "program",
    "programs", "progress", "project", "projection", "projects", "promise",
    "promises", "prompt", "proof", "propagation", "property", "properties",
    "proposal", "protection", "protocol", "protocols", "prototype",
    "provider", "providers", "province", "proxy", "public", "publication",
    "publisher", "pull", "pulse", "purchase", "purpose", "push", "puzzle",
    "pyramid", "quality", "quantity", "quarter", "query", "queries",
    "question", "questions", "queue", "queues", "quick", "quiet", "quota",
    "quotation", "quote", "quotes", "race", "radius", "random", "range",
    "ranges", "rank", "ranking", "ranks", "rate", "rates", "rating", "ratio",
    "ratios", "raw", "reach", "reaction", "reader", "readers", "real",
    "realm", "reason", "reasons", "receipt", "receiver", "receivers",
    "recent", "recipe", "recipient", "recipients", "record", "recorder",
    "records", "recovery", "rectangle", "recursion", "recursive", "red",
    "reference", "references", "referral", "refresh", "region", "regions",
    "registration", "registry", "regression", "regular", "relation",
    "relations", "relationship", "relative", "release", "releases",
    "relevance", "reminder", "remote", "removal", "renderer", "rendering",
    "repair", "replacement", "replica", "replication", "reporter", "reports",
    "repository", "repositories", "representation", "requests", "required",
    "requirement", "requirements", "reservation", "reserve", "reset",
    "resolution", "resolver", "resource", "resources", "response",
    "responses", "rest", "restriction", "result", "results", "retention",
    "retry", "revenue", "review", "reviews", "revision", "revisions",
    "reward", "right", "rights", "ring", "risk", "river", "road", "role",
    "roles", "roll", "room", "rooms", "root", "roots", "rotation", "round",
    "route", "router", "routes", "routine", "row", "rows", "rule", "rules",
    "runner", "runtime", "safe", "safety", "salary", "sale", "sales", "salt",
    "same", "sample", "samples", "sampler", "sandbox", "scalar", "scale",
    "scales", "scan", "scanner", "scenario", "scenarios", "scene", "schedule",
    "scheduler", "schedules", "schema", "schemas", "scheme", "school",
    "scope", "scopes", "score", "scores", "screen", "screens", "script",
    "scripts", "scroll", "search", "season", "seat", "second", "secondary",
    "seconds", "secret", "secrets", "section", "sections", "sector",
    "security", "seed", "seeds", "segment", "segments", "selection",
    "selector", "self", "semantic", "semantics", "sender", "senders",
    "sensitive", "sensor", "sensors", "sentence", "sentences", "sentinel",
    "separator", "separators", "sequence", "sequences", "serial",
    "serializer", "series", "server", "servers", "service", "services",
    "session", "sessions", "setting", "settings", "setup", "several",
    "severity", "shade", "shadow", "shape", "shapes", "shard", "shards",
    "share", "shared", "shares", "sheet", "shell", "shift", "ship",
    "shipping", "shop", "short", "shortcut", "sibling", "siblings", "side",
    "sides", "sight", "sigma", "signature", "signatures", "signal", "signals",
    "similarity", "simple", "single", "singleton", "sink", "site", "sites",
    "situation", "size", "sizes", "sketch", "skill", "skills", "skin",
    "slice", "slices", "slide", "slider", "slot", "slots", "slow", "small",
    "smart", "smooth", "snapshot", "snapshots", "social", "socket", "sockets",
    "soft", "software", "solid", "solution", "solutions", "solver", "some",
    "song", "songs", "sorted", "sorter", "sound", "sounds", "source",
    "sources", "south", "space", "spaces", "span", "spans", "spatial",
    "speaker", "special", "specification", "specifications", "spectrum",
    "speed", "sphere", "spin", "spiral", "sport", "spot", "spread", "spring",
    "sprite", "square", "stable", "stack", "stacks", "staff", "stage",
    "stages", "stamp", "standard", "standards", "star", "stars", "starting",
    "state", "statement", "statements", "states", "static", "station",
    "statistic", "statistics", "status", "statuses", "step", "steps",
    "stock", "stop", "storage", "store", "stores", "story", "strategy",
    "strategies", "stream", "streams", "street", "strength", "strict",
    "stride", "strike", "string", "strings", "stroke", "strong", "structure",
    "structures", "student", "students", "study", "style", "styles",
    "subject", "subjects", "submission", "subscriber", "subscribers",
    "subscription", "subscriptions", "subset", "subsets", "substitution",
    "substring", "subtree", "success", "suffix", "suffixes", "suggestion",
    "suggestions", "suite", "suites", "summary", "summaries", "super",
    "supervisor", "supplier", "suppliers", "surface", "surname", "survey",
    "suspend", "swing", "symbol", "symbols", "synchronization", "syntax",
    "synthetic", "system", "systems", "tab", "table", "tables", "tabs",
    "tag", "tags", "tail", "tangent", "target", "targets", "task", "tasks",
    "tax", "taxonomy", "team", "teams", "technique", "template", "templates",
    "temporal", "temporary", "tenant", "tenants", "tensor", "term",
    "terminal", "terminals", "termination", "terms", "test", "tests", "text",
    "texts", "texture", "theme", "themes", "theory", "thread", "threads",
    "threshold", "thresholds", "throughput", "thumbnail", "ticket",
    "tickets", "tile", "tiles", "time", "timeline", "timeout", "timeouts",
    "timer", "timers", "times", "timestamp", "timestamps", "timezone",
    "title", "titles", "today", "token", "tokenizer", "tokens", "tolerance",
    "tool", "toolbar", "tools", "tooltip", "top", "topic", "topics",
    "topology", "total", "totals", "touch", "tour", "tower", "town", "trace",
    "traces", "tracker", "tracking", "tracks", "trade", "traffic", "trail",
    "train", "training", "transaction", "transactions", "transfer",
    "transfers", "transformation", "transformer", "transient", "transition",
    "transitions", "translation", "translator", "transparent", "transport",
    "trash", "travel", "tree", "trees", "trend", "trial", "triangle",
    "trigger", "triggers", "trip", "truth", "tuple", "tuples", "turn",
    "tutorial", "twin", "type", "types", "unicode", "uniform", "union",
    "unique", "unit", "units", "universe", "unknown", "unsigned", "upper",
    "uptime", "usage", "user", "username", "users", "utility", "utilities",
    "valid", "validation", "validator", "validators", "value", "values",
    "variable", "variables", "variance", "variant", "variants", "variation",
    "vector", "vectors", "vehicle", "velocity", "vendor", "verb", "verbose",
    "verbs", "version", "versions", "vertex", "vertical", "vertices",
    "video", "videos", "view", "viewer", "viewport", "views", "virtual",
    "visibility", "visible", "vision", "visitor", "visitors", "visual",
    "vocabulary", "voice", "volume", "volumes", "vote", "votes", "voucher",
    "wall", "wallet", "warehouse", "warning", "warnings", "watcher",
    "watchers", "water", "wave", "weak", "weather", "web", "website", "week",
    "weeks", "weight", "weights", "west", "wheel", "white", "whole", "wide",
    "widget", "widgets", "width", "widths", "wild", "window", "windows",
    "wind", "wire", "wisdom", "with", "within", "without", "wizard", "word",
    "words", "work", "worker", "workers", "workflow", "workspace", "world",
    "wrapper", "wrappers", "writer", "writers", "yellow", "year", "years",
    "zero", "zone", "zones", "zoom",
};
extern const size_t kBuiltinDictionaryCount =
    sizeof(kBuiltinDictionary) / sizeof(kBuiltinDictionary[0]);

extern const char* const kBuiltinAbbreviations[] = {
    "abs", "acc", "ack", "addr", "agg", "alloc", "amt", "arg", "args",
    "async", "attr", "attrs", "auth", "avg", "bg", "bool", "buf", "bufs",
    "calc", "cb", "cfg", "cmd", "cmp", "cnt", "col", "cols", "cond", "conn",
    "coord", "coords", "cpu", "css", "csv", "ctx", "cur", "curr", "db",
    "dec", "def", "defs", "del", "delim", "desc", "dest", "dev", "diff",
    "diffs", "dim", "dims", "dir", "dirs", "div", "doc", "docs", "dpi",
    "dst", "dto", "elem", "elems", "enc", "env", "eq", "err", "esc", "eta",
    "exec", "expr", "exprs", "ext", "fd", "fifo", "fmt", "fn", "fs", "func",
    "funcs", "gen", "gps", "gpu", "gui", "guid", "hex", "html", "http",
    "https", "id", "ids", "idx", "img", "impl", "inc", "info", "int", "io",
    "ip", "iter", "jdbc", "js", "json", "jvm", "jwt", "kb", "lang", "lat",
    "len", "lhs", "lib", "libs", "lifo", "lon", "lru", "max", "mb", "md",
    "mgr", "mid", "min", "misc", "mod", "msg", "msgs", "mul", "nan", "nav",
    "net", "num", "nums", "obj", "objs", "oauth", "op", "ops", "os",
    "param", "params", "pct", "pdf", "pk", "png", "pos", "pref", "prefs",
    "prev", "proc", "prod", "prop", "props", "proto", "ptr", "pwd", "qty",
    "ref", "refs", "regex", "rem", "repo", "repos", "req", "res", "resp",
    "rgb", "rhs", "rpc", "rss", "sdk", "sec", "secs", "seq", "sess", "sig",
    "spec", "specs", "sql", "src", "ssl", "std", "str", "strs", "sub",
    "svc", "svg", "sym", "sys", "tcp", "tel", "thru", "tls", "tok", "tpl",
    "ts", "txt", "udp", "ui", "uid", "uri", "url", "urls", "usr", "utc",
    "util", "utils", "uuid", "val", "vals", "var", "vars", "vec", "ver",
    "vm", "ws", "xml", "yaml", "zip",
};
extern const size_t kBuiltinAbbreviationCount =
    sizeof(kBuiltinAbbreviations) / sizeof(kBuiltinAbbreviations[0]);

}  // namespace mnw
