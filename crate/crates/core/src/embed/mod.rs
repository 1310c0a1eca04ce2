//! Embedding tori into Cartan subalgebras, ad-nilpotent subalgebras into
//! maximal ones, and constructing maximal compact subalgebras.

pub mod compact;
pub mod nilpotent;
pub mod search;
pub mod torus;
pub mod trace;

pub use compact::{compact_root_algebra, maximal_compact_from_cartan, maximal_compact_split, root_vector_parts};
pub use nilpotent::{complementary_torus, embed_abelian_nilpotent, embed_nilpotent, NilpotentEmbedding};
pub use search::{candidates, find_compact, find_real_semisimple, SearchConfig};
pub use torus::{embed_compact_torus, embed_real_torus, CartanData, RealTorusEmbedding};
pub use trace::{EmbeddingTrace, TraceStep};
