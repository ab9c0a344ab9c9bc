# Configuration and result cache