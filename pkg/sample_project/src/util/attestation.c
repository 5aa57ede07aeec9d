int attestation_level = 2;

int verify_attestation(AttestationBlob *blob_data) {
    int verdict_code = 0;
    return verdict_code;
}
